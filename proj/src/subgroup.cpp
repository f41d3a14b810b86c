#include "growthlab/subgroup.hpp"

#include <algorithm>

namespace growthlab {

namespace {

class LatticeSubgroup final : public Subgroup {
 public:
  LatticeSubgroup(const AbelianGroup& g, const IntMatrix& generators) {
    IntMatrix rows = generators;
    for (const auto& r : g.relations().rows()) rows.push_back(r);
    for (const auto& r : rows)
      if (r.size() != g.width()) throw PreconditionError("subgroup generator has wrong width");
    span_ = HermiteBasis(rows, g.width());
  }
  bool contains(const Element& e) const override { return span_.contains(to_big(e)); }
  Element coset_key(const Element& e) const override {
    Element out;
    for (const auto& x : span_.reduce(to_big(e))) out.push_back(to_int(x));
    return out;
  }
  std::string describe() const override { return "lattice subgroup"; }

 private:
  static IntVector to_big(const Element& e) {
    IntVector v;
    for (Int x : e) v.emplace_back(static_cast<long>(x));
    return v;
  }
  HermiteBasis span_;
};

class CenterSubgroup final : public Subgroup {
 public:
  explicit CenterSubgroup(const Group& g) : g_(&g) {
    if (!g.center_coset_key(g.identity())) throw PreconditionError("family does not expose its center");
  }
  bool contains(const Element& e) const override { return coset_key(e) == coset_key(g_->identity()); }
  Element coset_key(const Element& e) const override { return *g_->center_coset_key(e); }
  std::string describe() const override { return "center"; }

 private:
  const Group* g_;
};

class FiniteSubgroup final : public Subgroup {
 public:
  FiniteSubgroup(const Group& g, ElementSet elements) : g_(&g), elements_(std::move(elements)) {}
  bool contains(const Element& e) const override { return elements_.contains(e); }
  Element coset_key(const Element& e) const override {
    Element best;
    Element p(g_->width());
    for (std::size_t i = 0; i < elements_.size(); ++i) {
      g_->multiply(e.data(), elements_.at(i), p.data());
      if (best.empty() || p < best) best = p;
    }
    return best;
  }
  std::string describe() const override { return "finite subgroup of order " + std::to_string(elements_.size()); }

 private:
  const Group* g_;
  ElementSet elements_;
};

}  // namespace

ElementSet subgroup_closure(const Group& g, const std::vector<Element>& gens, std::size_t cap) {
  std::vector<Element> steps;
  for (const auto& x : gens) {
    steps.push_back(g.canonical(x));
    steps.push_back(g.inverse(g.canonical(x)));
  }
  Ball ball = grow_ball(g, {g.identity()}, steps, 1 << 30, BallOptions{cap, true, true});
  if (ball.truncated) throw ResourceError("subgroup closure exceeds the cap; is the subgroup finite?");
  return std::move(ball.elements);
}

SubgroupPtr lattice_subgroup(const AbelianGroup& g, const IntMatrix& generators) {
  return std::make_shared<LatticeSubgroup>(g, generators);
}

SubgroupPtr center_subgroup(const Group& g) { return std::make_shared<CenterSubgroup>(g); }

SubgroupPtr finite_subgroup(const Group& g, const std::vector<Element>& generators, std::size_t cap) {
  return std::make_shared<FiniteSubgroup>(g, subgroup_closure(g, generators, cap));
}

std::vector<Int> coset_ball_counts(const Group& g, const GeneratingSet& s, const Subgroup& h, int radius,
                                   const BallOptions& options) {
  Ball ball = grow_ball(g, {g.identity()}, s.elements, radius, options);
  if (ball.truncated) throw ResourceError("ball exceeds the element cap");
  std::vector<Int> counts;
  ElementSet keys(0);
  std::size_t i = 0;
  for (std::size_t end : ball.layer_end) {
    for (; i < end; ++i) {
      Element key = h.coset_key(ball.elements.element(i));
      if (keys.width() != key.size()) keys = ElementSet(key.size());
      keys.insert(key);
    }
    counts.push_back(static_cast<Int>(keys.size()));
  }
  return counts;
}

}  // namespace growthlab
