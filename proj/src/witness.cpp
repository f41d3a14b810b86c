#include "growthlab/witness.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <set>
#include <sstream>

#include "growthlab/subgroup.hpp"

namespace growthlab {

BigInt finite_linear_group_bound(int d) {
  if (d < 0) throw PreconditionError("dimension must be non-negative");
  switch (d) {
    case 0: return 1;
    case 1: return 2;
    case 3: return 48;
    case 5: return 3840;
    default: return factorial(2L * d);
  }
}

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Skipped: return "skipped";
    case CheckStatus::Reported: return "reported";
  }
  return "?";
}

bool WitnessReport::ok() const {
  return std::none_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.status == CheckStatus::Fail; });
}

std::vector<std::string> WitnessReport::failing() const {
  std::vector<std::string> out;
  for (const auto& c : checks)
    if (c.status == CheckStatus::Fail) out.push_back(c.id);
  return out;
}

const CheckResult& WitnessReport::at(const std::string& id) const {
  for (const auto& c : checks)
    if (c.id == id) return c;
  throw PreconditionError("no check named " + id);
}

namespace {

constexpr int kInjHorizon = 16;

struct Level {
  const WitnessLevel* spec = nullptr;
  Int r = 0;
  Int next_r = 0;  // 0 for the last level
  std::optional<Ball> powers;
  std::string powers_error;
  std::vector<Element> subgroup_gens;
};

Int ceil_div(Int a, Int b) { return (a + b - 1) / b; }

/// Membership in the subgroup generated by the given elements: exact for abelian and finite groups.
class GeneratedSubgroup {
 public:
  GeneratedSubgroup(const Group& g, const std::vector<Element>& gens, const Ball* powers) : g_(&g), powers_(powers) {
    if (auto* a = dynamic_cast<const AbelianGroup*>(&g)) {
      IntMatrix rows;
      for (const auto& x : gens) {
        IntVector v;
        for (Int c : x) v.emplace_back(static_cast<long>(c));
        rows.push_back(std::move(v));
      }
      exact_ = lattice_subgroup(*a, rows);
    } else if (g.order()) {
      exact_ = finite_subgroup(g, gens);
    }
  }
  bool exact() const { return exact_ != nullptr; }
  /// nullopt when membership could not be decided.
  std::optional<bool> contains(const Element& x) const {
    if (exact_) return exact_->contains(g_->canonical(x));
    if (powers_ && powers_->elements.contains(g_->canonical(x))) return true;
    return std::nullopt;
  }
  std::optional<Element> key(const Element& x) const {
    if (exact_) return exact_->coset_key(g_->canonical(x));
    return std::nullopt;
  }

 private:
  const Group* g_;
  const Ball* powers_;
  SubgroupPtr exact_;
};

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(4);
  os << x;
  return os.str();
}

}  // namespace

WitnessReport verify_witness(const FineScaleWitness& w) {
  if (!w.group) throw PreconditionError("witness needs a group");
  const Group& g = *w.group;
  WitnessReport report;
  auto add = [&](std::string id, CheckStatus s, std::string detail) {
    report.checks.push_back({std::move(id), s, std::move(detail)});
  };

  // structural sanity
  {
    std::string bad;
    if (w.levels.empty()) bad = "no levels";
    else if (w.levels.size() != w.scales.size()) bad = "one scale per level is required";
    else if (static_cast<int>(w.levels.size()) - 1 > w.d) bad = "more levels than d + 1";
    else if (!w.lattice_maps.empty() && w.lattice_maps.size() + 1 != w.levels.size())
      bad = "lattice maps must connect consecutive levels";
    for (std::size_t i = 0; bad.empty() && i < w.levels.size(); ++i) {
      const auto& x = w.levels[i].translates;
      if (std::none_of(x.begin(), x.end(), [&](const Element& e) { return g.is_identity(g.canonical(e)); }))
        bad = "X_" + std::to_string(i) + " does not contain the identity";
      if (w.levels[i].progression.ambient_ptr().get() != w.group.get() &&
          w.levels[i].progression.ambient().fingerprint() != g.fingerprint())
        bad = "level " + std::to_string(i) + " lives in a different group";
    }
    if (!bad.empty()) {
      add("structure", CheckStatus::Fail, bad);
      return report;
    }
    add("structure", CheckStatus::Pass, std::to_string(w.levels.size()) + " levels");
  }

  const std::size_t nl = w.levels.size();
  {
    std::string bad;
    for (std::size_t i = 0; i < nl; ++i) {
      if (w.scales[i] < 1) bad = "scales must be positive";
      if (i + 1 < nl && w.scales[i] >= w.scales[i + 1]) bad = "scales must increase strictly";
      if (i + 1 < nl && w.scales[i + 1] % w.scales[i] != 0)
        bad = "r_" + std::to_string(i) + " = " + std::to_string(w.scales[i]) + " does not divide r_" +
              std::to_string(i + 1) + " = " + std::to_string(w.scales[i + 1]);
      if (!bad.empty()) break;
    }
    add("scales", bad.empty() ? CheckStatus::Pass : CheckStatus::Fail, bad.empty() ? "increasing, each dividing the next" : bad);
  }

  const Int max_scale = w.max_scale > 0 ? w.max_scale : 2 * w.scales.back();
  std::set<Int> sample_set;
  for (std::size_t i = 0; i < nl; ++i) {
    for (Int m = w.scales[i]; m <= max_scale; m *= 2) sample_set.insert(m);
    if (i + 1 < nl) {
      if (w.scales[i + 1] - 1 >= w.scales[i] && w.scales[i + 1] - 1 <= max_scale) sample_set.insert(w.scales[i + 1] - 1);
    }
  }
  report.samples.assign(sample_set.begin(), sample_set.end());

  BallOptions opts;
  opts.cap = w.cap;
  const auto s_elems = w.generators.elements;
  Ball sball = grow_ball(g, {g.identity()}, s_elems, static_cast<int>(max_scale), opts);
  if (sball.truncated) throw ResourceError("ball of S exceeds the witness cap");
  auto s_size = [&](Int m) { return static_cast<Int>(sball.layer_end[static_cast<std::size_t>(m)]); };
  auto in_s_ball = [&](const Element& e, Int m) {
    auto l = sball.layer_of(g.canonical(e));
    return l && *l <= m;
  };
  const Int s_card = s_size(1);

  std::vector<Level> levels(nl);
  for (std::size_t i = 0; i < nl; ++i) {
    Level& lv = levels[i];
    lv.spec = &w.levels[i];
    lv.r = w.scales[i];
    lv.next_r = i + 1 < nl ? w.scales[i + 1] : 0;
    const Progression& p = lv.spec->progression;
    try {
      const Int k_max = ceil_div(checked_mul(std::max<Int>(w.eta, 1), max_scale), lv.r);
      lv.powers = progression_powers(p, static_cast<int>(k_max), w.cap);
    } catch (const ResourceError& e) {
      lv.powers_error = e.what();
    }
    for (const auto& u : p.generators()) lv.subgroup_gens.push_back(p.to_ambient(u));
    for (const auto& h : p.symmetry()) lv.subgroup_gens.push_back(h);
  }

  // (i) X_i P_i^{floor(m/r_i)} inside S^m inside X_i P_i^{ceil(eta m / r_i)}
  {
    std::string bad, skipped;
    for (std::size_t i = 0; i < nl && bad.empty(); ++i) {
      const Level& lv = levels[i];
      if (!lv.powers) {
        skipped = "level " + std::to_string(i) + ": " + lv.powers_error;
        continue;
      }
      const Ball& pw = *lv.powers;
      for (Int m : report.samples) {
        if (m < lv.r) continue;
        const Int lo = m / lv.r;
        const Int hi = ceil_div(w.eta * m, lv.r);
        // lower inclusion
        for (const auto& x : lv.spec->translates) {
          for (std::size_t k = 0; k < pw.layer_end[static_cast<std::size_t>(lo)] && bad.empty(); ++k)
            if (!in_s_ball(g.multiply(x, pw.elements.element(k)), m))
              bad = "level " + std::to_string(i) + ", m=" + std::to_string(m) + ": X P^" + std::to_string(lo) +
                    " is not inside S^m";
        }
        // upper inclusion
        std::vector<Element> xinv;
        for (const auto& x : lv.spec->translates) xinv.push_back(g.inverse(g.canonical(x)));
        for (std::size_t k = 0; k < static_cast<std::size_t>(s_size(m)) && bad.empty(); ++k) {
          const Element s = sball.elements.element(k);
          bool found = false;
          for (const auto& xi : xinv) {
            auto l = pw.layer_of(g.multiply(xi, s));
            if (l && *l <= hi) {
              found = true;
              break;
            }
          }
          if (!found)
            bad = "level " + std::to_string(i) + ", m=" + std::to_string(m) + ": S^m is not inside X P^" +
                  std::to_string(hi);
        }
        if (!bad.empty()) break;
      }
    }
    if (!bad.empty()) add("i", CheckStatus::Fail, bad);
    else if (!skipped.empty()) add("i", CheckStatus::Skipped, skipped);
    else add("i", CheckStatus::Pass, "both inclusions hold on all samples");
  }

  // (ii) |X_i| <= g(dim P_i) and (iii) X_i inside S^{g(dim P_i) - 1}
  {
    std::string bad2, bad3, skip3;
    for (std::size_t i = 0; i < nl; ++i) {
      const BigInt bound = finite_linear_group_bound(static_cast<int>(w.levels[i].progression.dimension()));
      const auto& x = w.levels[i].translates;
      if (BigInt(static_cast<unsigned long>(x.size())) > bound && bad2.empty())
        bad2 = "|X_" + std::to_string(i) + "| = " + std::to_string(x.size()) + " exceeds " + bound.get_str();
      for (const auto& e : x) {
        const BigInt radius = bound - 1;
        auto l = sball.layer_of(g.canonical(e));
        if (l && BigInt(*l) <= radius) continue;
        if (!l && radius > BigInt(static_cast<long>(max_scale))) {
          skip3 = "an element of X_" + std::to_string(i) + " lies beyond the enumerated radius";
          continue;
        }
        if (bad3.empty()) bad3 = "X_" + std::to_string(i) + " is not inside S^" + radius.get_str();
      }
    }
    add("ii", bad2.empty() ? CheckStatus::Pass : CheckStatus::Fail, bad2.empty() ? "translate sets within g(dim)" : bad2);
    if (!bad3.empty()) add("iii", CheckStatus::Fail, bad3);
    else if (!skip3.empty()) add("iii", CheckStatus::Skipped, skip3);
    else add("iii", CheckStatus::Pass, "translates are short words");
  }

  // (iv) nesting of translate sets
  {
    std::string bad;
    for (std::size_t i = 0; i + 1 < nl && bad.empty(); ++i) {
      const ElementSet outer = make_set(g, w.levels[i].translates);
      for (const auto& e : w.levels[i + 1].translates)
        if (!outer.contains(g.canonical(e))) bad = "X_" + std::to_string(i + 1) + " is not inside X_" + std::to_string(i);
    }
    add("iv", bad.empty() ? CheckStatus::Pass : CheckStatus::Fail, bad.empty() ? "nested" : bad);
  }

  std::vector<GeneratedSubgroup> spans;
  for (std::size_t i = 0; i < nl; ++i)
    spans.emplace_back(g, levels[i].subgroup_gens, levels[i].powers ? &*levels[i].powers : nullptr);

  // (v) translates lie in distinct cosets
  {
    std::string bad, skipped;
    for (std::size_t i = 0; i < nl && bad.empty(); ++i) {
      const auto& x = w.levels[i].translates;
      if (x.size() <= 1) continue;
      if (!spans[i].exact()) {
        skipped = "coset membership undecided for level " + std::to_string(i);
        continue;
      }
      std::set<Element> keys;
      for (const auto& e : x)
        if (!keys.insert(*spans[i].key(e)).second) bad = "two elements of X_" + std::to_string(i) + " share a coset";
    }
    if (!bad.empty()) add("v", CheckStatus::Fail, bad);
    else if (!skipped.empty()) add("v", CheckStatus::Skipped, skipped);
    else add("v", CheckStatus::Pass, "distinct cosets");
  }

  // (vi) nesting of generated subgroups and (vii) nesting of symmetry groups
  {
    std::string bad, skipped;
    for (std::size_t i = 0; i + 1 < nl && bad.empty(); ++i)
      for (const auto& e : levels[i].subgroup_gens) {
        auto in = spans[i + 1].contains(e);
        if (!in) skipped = "membership in level " + std::to_string(i + 1) + " undecided";
        else if (!*in) {
          bad = "a generator of level " + std::to_string(i) + " lies outside the subgroup of level " + std::to_string(i + 1);
          break;
        }
      }
    if (!bad.empty()) add("vi", CheckStatus::Fail, bad);
    else if (!skipped.empty()) add("vi", CheckStatus::Skipped, skipped);
    else add("vi", CheckStatus::Pass, "nested");

    std::string bad7;
    for (std::size_t i = 0; i + 1 < nl && bad7.empty(); ++i) {
      const ElementSet outer = make_set(g, w.levels[i + 1].progression.symmetry());
      for (const auto& h : w.levels[i].progression.symmetry())
        if (!outer.contains(h)) bad7 = "H_" + std::to_string(i) + " is not inside H_" + std::to_string(i + 1);
    }
    add("vii", bad7.empty() ? CheckStatus::Pass : CheckStatus::Fail, bad7.empty() ? "nested" : bad7);
  }

  // (viii) lattice maps commute with the projections modulo the symmetry groups
  if (nl == 1) {
    add("viii", CheckStatus::Pass, "single level");
  } else if (w.lattice_maps.empty()) {
    add("viii", CheckStatus::Skipped, "no lattice maps supplied");
  } else {
    std::string bad, skipped;
    for (std::size_t i = 1; i < nl && bad.empty(); ++i) {
      const auto& map = w.lattice_maps[i - 1];
      const Progression& from = w.levels[i - 1].progression;
      const Progression& to = w.levels[i].progression;
      if (!map) {
        skipped = "no map into level " + std::to_string(i);
        continue;
      }
      if (!from.source().is_abelian() || !to.source().is_abelian()) {
        skipped = "lattice maps are checked between abelian lattices only";
        continue;
      }
      const std::size_t a = from.source().width(), b = to.source().width();
      if (map->size() != b || std::any_of(map->begin(), map->end(), [&](const IntVector& r) { return r.size() != a; })) {
        bad = "map into level " + std::to_string(i) + " has the wrong shape";
        break;
      }
      RatMatrix q;
      for (const auto& row : *map) {
        RatVector v;
        for (const auto& x : row) v.emplace_back(x);
        q.push_back(std::move(v));
      }
      if (rank(q) != b) {
        bad = "map into level " + std::to_string(i) + " is not surjective";
        break;
      }
      const ElementSet hs = make_set(g, to.symmetry());
      for (std::size_t k = 0; k < a && bad.empty(); ++k) {
        Element e(a, 0);
        e[k] = 1;
        Element image(b, 0);
        for (std::size_t r = 0; r < b; ++r) image[r] = to_int((*map)[r][k]);
        const Element lhs = to.to_ambient(to.source().canonical(image));
        const Element rhs = from.to_ambient(from.source().canonical(e));
        if (!hs.contains(g.multiply(g.inverse(lhs), rhs)))
          bad = "diagram fails on lattice generator " + std::to_string(k + 1) + " of level " + std::to_string(i - 1);
      }
    }
    if (!bad.empty()) add("viii", CheckStatus::Fail, bad);
    else if (!skipped.empty()) add("viii", CheckStatus::Skipped, skipped);
    else add("viii", CheckStatus::Pass, "diagrams commute on lattice generators");
  }

  // (ix) injectivity radii track the scale ratios
  [&] {
    std::string bad, detail;
    for (std::size_t i = 0; i < nl && bad.empty(); ++i) {
      const Progression& p = w.levels[i].progression;
      try {
        if (i + 1 < nl) {
          const Rational ratio(static_cast<long>(w.scales[i + 1]), static_cast<long>(w.scales[i]));
          const int j_max = static_cast<int>(to_int(ceil_of(w.inj_constant * ratio))) + 1;
          const Radius inj = injectivity_radius(p, j_max, w.cap);
          detail += "inj P_" + std::to_string(i) + " = " + (inj ? std::to_string(*inj) : ">=" + std::to_string(j_max)) +
                    ", ratio " + to_string(ratio) + "; ";
          if (!inj || Rational(*inj) > w.inj_constant * ratio || ratio > w.inj_constant * Rational(*inj))
            bad = "inj P_" + std::to_string(i) + " and r_" + std::to_string(i + 1) + "/r_" + std::to_string(i) +
                  " differ by more than the factor " + to_string(w.inj_constant);
        } else {
          const Radius inj = injectivity_radius(p, kInjHorizon, w.cap);
          if (inj) bad = "the last progression has finite injectivity radius " + std::to_string(*inj);
          else detail += "no kernel element in P_" + std::to_string(i) + "^j for j <= " + std::to_string(kInjHorizon);
        }
      } catch (const ResourceError& e) {
        add("ix", CheckStatus::Skipped, e.what());
        return;
      }
    }
    add("ix", bad.empty() ? CheckStatus::Pass : CheckStatus::Fail, bad.empty() ? detail : bad);
  }();

  // (x), (xi) dimensions decrease strictly below their caps
  std::vector<int> dims, hdims;
  bool hdim_known = true;
  for (std::size_t i = 0; i < nl; ++i) {
    dims.push_back(static_cast<int>(w.levels[i].progression.dimension()));
    auto h = w.levels[i].homogeneous_dimension;
    if (!h) h = w.levels[i].progression.source().homogeneous_dimension();
    if (!h) hdim_known = false;
    hdims.push_back(h.value_or(-1));
  }
  {
    bool ok = dims[0] <= w.d;
    for (std::size_t i = 1; i < nl; ++i) ok = ok && dims[i] < dims[i - 1];
    add("x", ok ? CheckStatus::Pass : CheckStatus::Fail, ok ? "dimensions decrease" : "dimension condition fails");
    if (!hdim_known) {
      add("xi", CheckStatus::Skipped, "homogeneous dimension unknown");
    } else {
      bool okh = hdims[0] <= w.d * (w.d - 1) / 2 + 1;
      for (std::size_t i = 1; i < nl; ++i) okh = okh && hdims[i] < hdims[i - 1];
      add("xi", okh ? CheckStatus::Pass : CheckStatus::Fail,
          okh ? "homogeneous dimensions decrease" : "homogeneous dimension condition fails");
    }
  }

  // (xii), (xiii) lower volume bounds on each scale range
  auto volume_check = [&](const std::string& id, const std::optional<Rational>& c, bool with_s, const std::vector<int>& exps) {
    Rational worst;
    bool have = false, fail = false;
    std::string where;
    for (std::size_t i = 0; i < nl; ++i) {
      for (Int m : report.samples) {
        if (m < w.scales[i] || (i + 1 < nl && m >= w.scales[i + 1])) continue;
        Rational denom = pow(Rational(static_cast<long>(m)), exps[i]);
        if (with_s) denom *= Rational(static_cast<long>(s_card));
        const Rational ratio = Rational(static_cast<long>(s_size(m))) / denom;
        if (!have || ratio < worst) {
          worst = ratio;
          have = true;
        }
        if (c && ratio < *c && !fail) {
          fail = true;
          where = "level " + std::to_string(i) + ", m=" + std::to_string(m);
        }
      }
    }
    std::string detail = have ? "smallest ratio " + fmt(worst.get_d()) : "no samples";
    if (!c) add(id, CheckStatus::Reported, detail);
    else if (fail) add(id, CheckStatus::Fail, "bound with constant " + to_string(*c) + " fails at " + where);
    else add(id, CheckStatus::Pass, detail);
  };
  volume_check("xii", w.dim_constant, true, dims);
  if (hdim_known) volume_check("xiii", w.hdim_constant, false, hdims);
  else add("xiii", CheckStatus::Skipped, "homogeneous dimension unknown");

  // (xiv) empirical exponents on each scale range
  {
    std::ostringstream os;
    for (std::size_t i = 0; i < nl; ++i) {
      double lo = 1e300, hi = -1e300;
      for (Int m : report.samples) {
        if (m <= w.scales[i] || (i + 1 < nl && m >= w.scales[i + 1])) continue;
        const double e = std::log(static_cast<double>(s_size(m)) / static_cast<double>(s_size(w.scales[i]))) /
                         std::log(static_cast<double>(m) / static_cast<double>(w.scales[i]));
        lo = std::min(lo, e);
        hi = std::max(hi, e);
      }
      os << "level " << i << ": ";
      if (lo > hi) os << "no samples";
      else os << "exponent in [" << fmt(lo) << ", " << fmt(hi) << "]";
      os << (i + 1 < nl ? "; " : "");
    }
    add("xiv", CheckStatus::Reported, os.str());
  }

  // (xv) finite groups: abelian progressions on scales above the square root of the diameter
  if (!g.order()) {
    add("xv", CheckStatus::Skipped, "group is infinite");
  } else if (!w.sqrt_scale_constant) {
    add("xv", CheckStatus::Skipped, "no constant supplied");
  } else {
    const int diam = diameter(g, w.generators, opts);
    std::string bad;
    for (std::size_t i = 0; i < nl; ++i) {
      const bool large = i + 1 == nl ||
                         Rational(static_cast<long>(w.scales[i + 1])) * Rational(static_cast<long>(w.scales[i + 1])) >
                             *w.sqrt_scale_constant * *w.sqrt_scale_constant * Rational(diam);
      const int cls = w.levels[i].progression.source().nilpotency_class().value_or(
          w.levels[i].progression.source().is_abelian() ? 1 : 0);
      if (large && cls != 1) bad = "progression " + std::to_string(i) + " is not abelian";
    }
    add("xv", bad.empty() ? CheckStatus::Pass : CheckStatus::Fail, bad.empty() ? "diameter " + std::to_string(diam) : bad);
  }

  // (xvi) injectivity radius modulo the centre
  {
    std::string bad, skipped, detail;
    for (std::size_t i = 0; i + 1 < nl && bad.empty(); ++i) {
      const Progression& p = w.levels[i].progression;
      const auto cls = p.source().is_abelian() ? std::optional<int>(1) : p.source().nilpotency_class();
      if (!cls) {
        skipped = "class of level " + std::to_string(i) + " unknown";
        continue;
      }
      if (*cls == 1) {
        detail += "level " + std::to_string(i) + " abelian; ";
        continue;
      }
      if (!w.injz_constant) {
        skipped = "no constant supplied";
        continue;
      }
      const double target = w.injz_constant->get_d() *
                            std::pow(static_cast<double>(w.scales[i + 1]), static_cast<double>(*cls) / (*cls - 1)) /
                            static_cast<double>(w.scales[i]);
      const int j_max = static_cast<int>(std::ceil(target));
      try {
        const Radius r = inj_mod_center(p, std::max(j_max, 1), w.cap);
        if (r && *r < target) bad = "inj^Z P_" + std::to_string(i) + " = " + std::to_string(*r) + " < " + fmt(target);
        else detail += "level " + std::to_string(i) + " inj^Z >= " + fmt(target) + "; ";
      } catch (const ResourceError& e) {
        skipped = e.what();
      }
    }
    if (!bad.empty()) add("xvi", CheckStatus::Fail, bad);
    else if (!skipped.empty()) add("xvi", CheckStatus::Skipped, skipped);
    else add("xvi", CheckStatus::Pass, detail.empty() ? "single level" : detail);
  }
  return report;
}

}  // namespace growthlab
