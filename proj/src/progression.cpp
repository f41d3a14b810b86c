#include "growthlab/progression.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "growthlab/free_nilpotent.hpp"

namespace growthlab {

namespace {

BigInt box_size(const std::vector<Int>& bounds) {
  BigInt n = 1;
  for (Int b : bounds) n *= BigInt(static_cast<long>(2 * b + 1));
  return n;
}

void require_box_within(const std::vector<Int>& bounds, std::size_t cap, const char* what) {
  if (box_size(bounds) > BigInt(static_cast<unsigned long>(cap)))
    throw ResourceError(std::string(what) + ": exponent box of size " + box_size(bounds).get_str() +
                        " exceeds the cap of " + std::to_string(cap));
}

/// Calls visit(product, exponents) for u_1^{l_1}..u_d^{l_d} with |l_i| <= bounds[i], in lexicographic order of l.
template <class Visit>
void for_each_in_box(const Group& g, const std::vector<Element>& u, const std::vector<Int>& bounds, Visit&& visit) {
  const std::size_t d = u.size();
  std::vector<std::vector<Element>> powers(d);
  for (std::size_t i = 0; i < d; ++i) {
    Element inv = g.inverse(u[i]);
    std::vector<Element>& p = powers[i];
    p.assign(static_cast<std::size_t>(2 * bounds[i] + 1), g.identity());
    const std::size_t mid = static_cast<std::size_t>(bounds[i]);
    for (Int l = 1; l <= bounds[i]; ++l) {
      p[mid + static_cast<std::size_t>(l)] = g.multiply(p[mid + static_cast<std::size_t>(l) - 1], u[i]);
      p[mid - static_cast<std::size_t>(l)] = g.multiply(p[mid - static_cast<std::size_t>(l) + 1], inv);
    }
  }
  std::vector<Element> prefix(d + 1, g.identity());
  std::vector<Int> exps(d, 0);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == d) {
      visit(prefix[d], exps);
      return;
    }
    for (Int l = -bounds[i]; l <= bounds[i]; ++l) {
      exps[i] = l;
      g.multiply(prefix[i].data(), powers[i][static_cast<std::size_t>(l + bounds[i])].data(), prefix[i + 1].data());
      rec(i + 1);
    }
    exps[i] = 0;
  };
  rec(0);
}

std::vector<Int> floor_bounds(const std::vector<Rational>& lengths) {
  std::vector<Int> b;
  b.reserve(lengths.size());
  for (const auto& l : lengths) b.push_back(to_int(floor_of(l)));
  return b;
}

}  // namespace

Progression::Progression(GroupPtr ambient, std::vector<Element> generators, std::vector<Rational> lengths,
                         std::optional<Projection> projection)
    : ambient_(std::move(ambient)),
      generators_(std::move(generators)),
      lengths_(std::move(lengths)),
      projection_(std::move(projection)),
      symmetry_set_(ambient_->width()) {
  if (generators_.size() != lengths_.size())
    throw PreconditionError("progression needs one length per generator");
  for (const auto& l : lengths_)
    if (l < 0) throw PreconditionError("progression lengths must be non-negative");
  const Group& src = source();
  for (auto& u : generators_) {
    if (u.size() != src.width()) throw PreconditionError("generator has the wrong number of coordinates");
    u = src.canonical(u);
  }
  if (projection_) {
    if (!projection_->lattice) throw PreconditionError("projection needs a lattice group");
    const auto& m = projection_->matrix;
    if (m.empty()) {
      if (projection_->lattice->width() != ambient_->width())
        throw PreconditionError("lattice and ambient coordinates differ; give a projection matrix");
    } else {
      if (!projection_->lattice->is_abelian())
        throw PreconditionError("projection matrices need an abelian lattice");
      if (m.size() != ambient_->width()) throw PreconditionError("projection matrix has the wrong number of rows");
      for (const auto& row : m)
        if (row.size() != projection_->lattice->width())
          throw PreconditionError("projection matrix has the wrong number of columns");
    }
  }
  symmetry_set_.insert(ambient_->identity());
  if (projection_)
    for (const auto& h : projection_->symmetry) symmetry_set_.insert(ambient_->canonical(h));
  const std::size_t n = symmetry_set_.size();
  for (std::size_t a = 0; a < n; ++a) {
    const Element x = symmetry_set_.element(a);
    if (!symmetry_set_.contains(ambient_->inverse(x)))
      throw PreconditionError("symmetry set is not closed under inversion");
    for (std::size_t b = 0; b < n; ++b)
      if (!symmetry_set_.contains(ambient_->multiply(x, symmetry_set_.element(b))))
        throw PreconditionError("symmetry set is not closed under multiplication");
    for (const auto& u : generators_) {
      const Element v = to_ambient(u);
      if (!symmetry_set_.contains(ambient_->multiply(ambient_->multiply(v, x), ambient_->inverse(v))))
        throw PreconditionError("symmetry subgroup is not normalized by the generators");
    }
  }
  if (projection_ && !projection_->matrix.empty()) {
    // the coordinate map must be a homomorphism modulo the symmetry subgroup
    const std::size_t k = projection_->lattice->width();
    auto unit = [&](std::size_t i) {
      Element e(k, 0);
      e[i] = 1;
      return e;
    };
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) {
        Element sum = unit(i);
        sum[j] += 1;
        const Element lhs = to_ambient(sum);
        const Element rhs = ambient_->multiply(to_ambient(unit(i)), to_ambient(unit(j)));
        if (!symmetry_set_.contains(ambient_->multiply(ambient_->inverse(lhs), rhs)))
          throw PreconditionError("projection matrix is not a homomorphism modulo the symmetry subgroup");
      }
  }
}

std::vector<Int> Progression::bounds() const { return floor_bounds(lengths_); }

Progression Progression::with_lengths(std::vector<Rational> lengths) const {
  return Progression(ambient_, generators_, std::move(lengths), projection_);
}

Progression Progression::scaled(const Rational& factor) const {
  std::vector<Rational> l = lengths_;
  for (auto& x : l) x *= factor;
  return with_lengths(std::move(l));
}

Element Progression::to_ambient(const Element& x) const {
  if (!projection_ || projection_->matrix.empty()) return ambient_->canonical(x);
  const auto& m = projection_->matrix;
  Element y(m.size(), 0);
  for (std::size_t r = 0; r < m.size(); ++r)
    for (std::size_t c = 0; c < x.size(); ++c) y[r] = checked_add(y[r], checked_mul(m[r][c], x[c]));
  return ambient_->canonical(std::move(y));
}

std::vector<Element> Progression::symmetry() const { return symmetry_set_.elements(); }

bool Progression::in_kernel(const Element& x) const { return symmetry_set_.contains(to_ambient(x)); }

ElementSet Progression::enumerate_source(std::size_t cap) const {
  const auto b = bounds();
  require_box_within(b, cap, "progression");
  const Group& g = source();
  ElementSet out(g.width());
  for_each_in_box(g, generators_, b, [&](const Element& e, const std::vector<Int>&) { out.insert(e); });
  return out;
}

ElementSet Progression::enumerate(std::size_t cap) const {
  const ElementSet raw = enumerate_source(cap);
  if (BigInt(static_cast<unsigned long>(raw.size())) * BigInt(static_cast<unsigned long>(symmetry_set_.size())) >
      BigInt(static_cast<unsigned long>(cap)))
    throw ResourceError("progression with its symmetry subgroup exceeds the cap");
  ElementSet out(ambient_->width());
  const auto hs = symmetry_set_.elements();
  for (std::size_t i = 0; i < raw.size(); ++i) {
    const Element a = to_ambient(raw.element(i));
    for (const auto& h : hs) out.insert(ambient_->multiply(a, h));
  }
  return out;
}

UpperTriangularReport check_upper_triangular(const Group& g, const std::vector<Element>& u,
                                             const std::vector<Rational>& lengths, Int c_max,
                                             std::size_t search_cap) {
  if (u.size() != lengths.size()) throw PreconditionError("one length per generator is required");
  for (const auto& l : lengths)
    if (l <= 0) throw PreconditionError("upper-triangular form needs positive lengths");
  if (c_max < 1) throw PreconditionError("c_max must be at least 1");
  const std::size_t d = u.size();
  UpperTriangularReport report;
  report.constant = 1;
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i + 1; j < d; ++j) {
      const Rational lij = lengths[i] * lengths[j];
      std::vector<Element> tail(u.begin() + static_cast<std::ptrdiff_t>(j + 1), u.end());
      for (int s : {1, -1}) {
        for (int t : {1, -1}) {
          const Element target =
              g.commutator(s > 0 ? u[i] : g.inverse(u[i]), t > 0 ? u[j] : g.inverse(u[j]));
          TailExpression best;
          best.i = i;
          best.j = j;
          best.s = s;
          best.t = t;
          bool found = false;
          if (g.is_identity(target)) {
            best.exponents.assign(d, 0);
            best.required = 0;
            found = true;
          }
          std::string failure;
          for (Int level = 1; !found; level = std::min(c_max, level * 2)) {
            std::vector<Int> bounds;
            for (std::size_t k = j + 1; k < d; ++k)
              bounds.push_back(to_int(floor_of(Rational(level) * lengths[k] / lij)));
            if (box_size(bounds) > BigInt(static_cast<unsigned long>(search_cap))) {
              failure = "search box exceeds the cap at C=" + std::to_string(level);
              break;
            }
            Int best_l1 = 0;
            for_each_in_box(g, tail, bounds, [&](const Element& e, const std::vector<Int>& l) {
              if (e != target) return;
              Rational req = 0;
              Int l1 = 0;
              for (std::size_t k = 0; k < l.size(); ++k) {
                if (l[k] == 0) continue;
                l1 += l[k] < 0 ? -l[k] : l[k];
                Rational r = Rational(l[k] < 0 ? -l[k] : l[k]) * lij / lengths[j + 1 + k];
                if (r > req) req = r;
              }
              if (!found || req < best.required || (req == best.required && l1 < best_l1)) {
                found = true;
                best.required = req;
                best_l1 = l1;
                best.exponents.assign(d, 0);
                for (std::size_t k = 0; k < l.size(); ++k) best.exponents[j + 1 + k] = l[k];
              }
            });
            if (level == c_max) break;
          }
          if (!found) {
            std::ostringstream os;
            os << "no expression for [u" << i + 1 << "^" << (s > 0 ? "+1" : "-1") << ", u" << j + 1 << "^"
               << (t > 0 ? "+1" : "-1") << "] within C <= " << c_max;
            if (!failure.empty()) os << " (" << failure << ")";
            report.ok = false;
            report.failure = os.str();
            return report;
          }
          Int c = std::max<Int>(1, to_int(ceil_of(best.required)));
          report.constant = std::max(report.constant, c);
          report.expressions.push_back(std::move(best));
        }
      }
    }
  }
  report.ok = true;
  return report;
}

UpperTriangularReport check_upper_triangular(const Progression& p, Int c_max) {
  return check_upper_triangular(p.source(), p.generators(), p.lengths(), c_max);
}

std::vector<int> zeta_weights(std::size_t dimension, const std::vector<TailExpression>& expressions) {
  std::vector<int> zeta(dimension, 1);
  for (std::size_t k = 0; k < dimension; ++k)
    for (const auto& e : expressions)
      if (k < e.exponents.size() && e.exponents[k] != 0)
        zeta[k] = std::max(zeta[k], zeta[e.i] + zeta[e.j]);
  return zeta;
}

Progression nilpotent_progression(GroupPtr g, const std::vector<Element>& x, const std::vector<Rational>& lengths,
                                  int nilpotency_class) {
  if (x.size() != lengths.size()) throw PreconditionError("one length per generator is required");
  if (x.empty()) return Progression(std::move(g), {}, {});
  const HallBasis basis(static_cast<int>(x.size()), nilpotency_class);
  std::vector<Element> u;
  std::vector<Rational> l;
  for (std::size_t k = 0; k < basis.size(); ++k) {
    const BasicCommutator& b = basis[k];
    if (b.is_generator()) {
      u.push_back(g->canonical(x[static_cast<std::size_t>(b.right)]));
    } else {
      u.push_back(g->commutator(u[static_cast<std::size_t>(b.left)], u[static_cast<std::size_t>(b.right)]));
    }
    Rational len = 1;
    for (std::size_t i = 0; i < b.content.size(); ++i) len *= pow(lengths[i], b.content[i]);
    l.push_back(len);
  }
  return Progression(std::move(g), std::move(u), std::move(l));
}

std::optional<Int> dilation_constant(const Progression& p, const std::vector<int>& zeta, int n_max, Int c_max) {
  if (zeta.size() != p.dimension()) throw PreconditionError("one weight per generator is required");
  const Group& g = p.source();
  const ElementSet base = p.enumerate_source();
  Ball powers = grow_ball(g, {g.identity()}, base.elements(), n_max);
  if (powers.truncated) throw ResourceError("powers of the progression exceed the cap");
  for (Int c = 1; c <= c_max; ++c) {
    bool ok = true;
    for (int n = 1; n <= n_max && ok; ++n) {
      std::vector<Rational> l(p.dimension());
      for (std::size_t i = 0; i < l.size(); ++i) l[i] = Rational(c) * pow(Rational(n), zeta[i]) * p.lengths()[i];
      const ElementSet big = p.with_lengths(l).enumerate_source();
      const std::size_t end = powers.layer_end[static_cast<std::size_t>(n)];
      for (std::size_t k = 0; k < end && ok; ++k)
        if (!big.find(powers.elements.at(k))) ok = false;
    }
    if (ok) return c;
  }
  return std::nullopt;
}

Ball progression_powers(const Progression& p, int radius, std::size_t cap) {
  // P^n = H (raw image)^n for n >= 1, since the images of the generators normalize H.
  const Group& g = p.ambient();
  const ElementSet raw = p.enumerate_source(cap);
  std::vector<Element> steps;
  {
    ElementSet seen(g.width());
    for (std::size_t i = 0; i < raw.size(); ++i) {
      Element a = p.to_ambient(raw.element(i));
      if (seen.insert(a).second) steps.push_back(std::move(a));
    }
  }
  BallOptions opts;
  opts.cap = cap;
  Ball hb = grow_ball(g, p.symmetry(), steps, std::max(radius, 0), opts);
  if (hb.truncated) throw ResourceError("powers of the progression exceed the cap");
  Ball b;
  b.elements = ElementSet(g.width());
  b.elements.insert(g.identity());
  for (std::size_t i = 0; i < hb.elements.size(); ++i) b.elements.insert(hb.elements.at(i));
  b.layer_end.push_back(1);
  for (int n = 1; n <= radius; ++n) b.layer_end.push_back(hb.layer_end[static_cast<std::size_t>(n)]);
  return b;
}

Radius injectivity_radius(const Progression& p, int j_max, std::size_t cap) {
  if (!p.projection()) return std::nullopt;
  const Group& g = p.source();
  const ElementSet base = p.enumerate_source(cap);
  for (std::size_t k = 0; k < base.size(); ++k) {
    const Element e = base.element(k);
    if (!g.is_identity(e) && p.in_kernel(e)) return 0;
  }
  BallOptions opts;
  opts.cap = cap;
  BallGrower grower(g, {g.identity()}, base.elements(), opts);
  for (int j = 1; j <= j_max; ++j) {
    if (!grower.grow()) throw ResourceError("powers of the raw progression exceed the cap");
    const ElementSet& s = grower.ball().elements;
    const std::size_t lo = grower.first_new(), hi = s.size();
    if (lo == hi) return std::nullopt;
    for (std::size_t k = lo; k < hi; ++k)
      if (p.in_kernel(s.element(k))) return j - 1;
  }
  return std::nullopt;
}

namespace {

/// Heisenberg quotients by central subgroups, with a central symmetry group, have a central kernel.
bool kernel_is_central(const Progression& p) {
  if (!p.projection() || !p.projection()->matrix.empty()) return false;
  auto* lattice = dynamic_cast<const HeisenbergGroup*>(&p.source());
  auto* ambient = dynamic_cast<const HeisenbergGroup*>(&p.ambient());
  if (!lattice || !ambient || lattice->spec().quotient != HeisenbergSpec::Quotient::None) return false;
  const auto q = ambient->spec().quotient;
  if (q != HeisenbergSpec::Quotient::None && q != HeisenbergSpec::Quotient::Center) return false;
  const auto gens = default_generators(p.ambient());
  for (const auto& h : p.symmetry())
    for (const auto& x : gens)
      if (!p.ambient().commute(h, x)) return false;
  return true;
}

}  // namespace

Radius inj_mod_center(const Progression& p, int j_max, std::size_t cap) {
  if (!p.projection()) return std::nullopt;
  const Group& g = p.source();
  if (g.is_abelian() || kernel_is_central(p)) return std::nullopt;
  const auto gens = default_generators(g);
  const ElementSet base = p.enumerate_source(cap);
  std::vector<Element> inverses;
  for (std::size_t k = 0; k < base.size(); ++k) inverses.push_back(g.inverse(base.element(k)));
  BallOptions opts;
  opts.cap = cap;
  auto violates = [&](int j) {
    const Ball pj = grow_ball(g, {g.identity()}, base.elements(), j, opts);
    if (pj.truncated) throw ResourceError("powers of the raw progression exceed the cap");
    const Ball q = grow_ball(g, pj.elements.elements(), inverses, j, opts);
    if (q.truncated) throw ResourceError("P^j P^-j exceeds the cap");
    for (std::size_t k = 0; k < q.elements.size(); ++k) {
      const Element e = q.elements.element(k);
      if (!p.in_kernel(e)) continue;
      for (const auto& x : gens)
        if (!g.commute(e, x)) return true;
    }
    return false;
  };
  // galloping search; violations are monotone in j
  int good = 0, bad = -1;
  for (int j = 1;; j = std::min(j_max, 2 * j)) {
    if (violates(j)) {
      bad = j;
      break;
    }
    good = j;
    if (j == j_max) return std::nullopt;
  }
  while (bad - good > 1) {
    const int mid = (good + bad) / 2;
    if (violates(mid)) bad = mid;
    else good = mid;
  }
  return bad - 1;
}

std::vector<Element> symmetry_set(const Progression& p, std::size_t cap) {
  const ElementSet set = p.enumerate(cap);
  if (BigInt(static_cast<unsigned long>(set.size())) * BigInt(static_cast<unsigned long>(set.size())) >
      BigInt(static_cast<unsigned long>(cap)) * 64)
    throw ResourceError("stabilizer search exceeds the cap");
  const Group& g = p.ambient();
  std::vector<Element> out;
  Element prod(g.width());
  for (std::size_t a = 0; a < set.size(); ++a) {
    bool ok = true;
    for (std::size_t b = 0; b < set.size() && ok; ++b) {
      g.multiply(set.at(a), set.at(b), prod.data());
      if (!set.find(prod.data())) ok = false;
    }
    if (ok) out.push_back(set.element(a));
  }
  std::sort(out.begin(), out.end());
  return out;
}

ApproxDiagnostics approx_diagnostics(const Group& g, const ElementSet& a, std::size_t cap) {
  if (a.empty()) throw PreconditionError("approximate-group diagnostics need a non-empty set");
  BallOptions opts;
  opts.cap = cap;
  const ElementSet a2 = product_set(g, a, a, opts);
  if (a2.size() > cap) throw ResourceError("A^2 exceeds the cap");
  const ElementSet a3 = product_set(g, a2, a, opts);
  if (a3.size() > cap) throw ResourceError("A^3 exceeds the cap");
  ApproxDiagnostics out;
  out.doubling = Rational(static_cast<long>(a2.size()), static_cast<long>(a.size()));
  out.tripling = Rational(static_cast<long>(a3.size()), static_cast<long>(a.size()));

  std::vector<Element> candidates = a3.elements();
  std::sort(candidates.begin(), candidates.end());
  std::vector<char> covered(a2.size(), 0);
  std::size_t remaining = a2.size();
  Element prod(g.width());
  while (remaining > 0) {
    std::size_t best = 0, best_gain = 0;
    for (std::size_t c = 0; c < candidates.size(); ++c) {
      std::size_t gain = 0;
      for (std::size_t k = 0; k < a.size(); ++k) {
        g.multiply(candidates[c].data(), a.at(k), prod.data());
        if (auto id = a2.find(prod.data()); id && !covered[*id]) ++gain;
      }
      if (gain > best_gain) {
        best_gain = gain;
        best = c;
      }
    }
    if (best_gain == 0) throw PreconditionError("A^2 cannot be covered by translates of A; is A symmetric?");
    for (std::size_t k = 0; k < a.size(); ++k) {
      g.multiply(candidates[best].data(), a.at(k), prod.data());
      if (auto id = a2.find(prod.data()); id && !covered[*id]) {
        covered[*id] = 1;
        --remaining;
      }
    }
    out.cover.push_back(candidates[best]);
  }
  out.greedy_cover = out.cover.size();
  return out;
}

IdentityReport progression_identities_check(const Progression& p, Int m, std::size_t cap) {
  if (m < 1) throw PreconditionError("dilation factor must be positive");
  const Group& g = p.ambient();
  const ElementSet base = p.enumerate(cap);
  const ElementSet dilated = p.scaled(Rational(m)).enumerate(cap);
  std::vector<Element> inverses;
  for (std::size_t k = 0; k < base.size(); ++k) inverses.push_back(g.inverse(base.element(k)));
  const int d = std::max<int>(1, static_cast<int>(p.dimension()));
  const Int k_max = checked_mul(2 * d, m);

  BallOptions opts;
  opts.cap = cap;
  BallGrower grower(g, {g.identity()}, base.elements(), opts);
  IdentityReport report;
  auto contains_all = [&](auto&& items, std::size_t n) {
    const ElementSet& s = grower.ball().elements;
    for (std::size_t k = 0; k < n; ++k)
      if (!s.contains(items(k))) return false;
    return true;
  };
  for (Int k = 0; k <= k_max; ++k) {
    if (k > 0 && !grower.grow()) throw ResourceError("powers of the progression exceed the cap");
    if (report.inverse_power < 0 && k <= d &&
        contains_all([&](std::size_t i) { return inverses[i]; }, inverses.size()))
      report.inverse_power = static_cast<int>(k);
    if (report.dilation_power < 0 && contains_all([&](std::size_t i) { return dilated.element(i); }, dilated.size()))
      report.dilation_power = static_cast<int>(k);
    if ((report.inverse_power >= 0 || k >= d) && report.dilation_power >= 0) break;
  }
  report.ok = report.inverse_power >= 0 && report.dilation_power >= 0;
  return report;
}

FiniteSubgroupReport finite_subgroup_in_power(const Progression& p, const std::vector<Element>& k, int j_max,
                                              std::size_t cap) {
  FiniteSubgroupReport report;
  report.inj = injectivity_radius(p, j_max, cap);
  const int half = (report.inj ? *report.inj : j_max) / 2;
  const Ball powers = progression_powers(p, half, cap);
  const std::size_t end = powers.layer_end[static_cast<std::size_t>(half)];
  const Group& g = p.ambient();
  report.precondition = true;
  for (const auto& x : k) {
    auto id = powers.elements.find(g.canonical(x).data());
    if (!id || *id >= end) report.precondition = false;
  }
  const auto hs = p.symmetry();
  const ElementSet h = make_set(g, hs);
  report.contained = true;
  for (const auto& x : k)
    if (!h.contains(g.canonical(x))) report.contained = false;
  return report;
}

}  // namespace growthlab
