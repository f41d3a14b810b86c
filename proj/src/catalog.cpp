#include "growthlab/catalog.hpp"

#include <algorithm>
#include <sstream>

#include "growthlab/ball.hpp"
#include "growthlab/free_nilpotent.hpp"
#include "growthlab/growth.hpp"
#include "growthlab/relations.hpp"

namespace growthlab {

std::string to_string(FactSource s) {
  switch (s) {
    case FactSource::Closed: return "closed-form";
    case FactSource::Computed: return "computed";
    case FactSource::Literature: return "literature";
  }
  return "closed-form";
}

std::string to_string(CatalogFact::Kind k) {
  switch (k) {
    case CatalogFact::Kind::Profile: return "profile";
    case CatalogFact::Kind::Order: return "order";
    case CatalogFact::Kind::GrowthDegree: return "growth-degree";
    case CatalogFact::Kind::FitDegrees: return "fit-degrees";
    case CatalogFact::Kind::RelationScales: return "relation-scales";
  }
  return "profile";
}

namespace {

using Kind = CatalogFact::Kind;

Int parse_int(const std::string& text, const std::string& name, Int lo, Int hi) {
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(text, &used);
  } catch (const std::exception&) {
    throw ParseError("bad integer '" + text + "' in catalog name '" + name + "'");
  }
  if (used != text.size() || v < lo || v > hi)
    throw ParseError("integer '" + text + "' out of range in catalog name '" + name + "'");
  return static_cast<Int>(v);
}

std::vector<Int> parse_list(const std::string& text, const std::string& name, Int lo, Int hi) {
  std::vector<Int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_int(item, name, lo, hi));
  if (out.empty()) throw ParseError("empty parameter list in catalog name '" + name + "'");
  return out;
}

Element unit(std::size_t w, std::size_t i) {
  Element e(w, 0);
  e[i] = 1;
  return e;
}

CatalogFact fact(Kind k, std::vector<Int> values, FactSource src, std::string note, int radius = 0, int anchor = 1) {
  CatalogFact f;
  f.kind = k;
  f.values = std::move(values);
  f.radius = radius;
  f.anchor = anchor;
  f.source = src;
  f.note = std::move(note);
  return f;
}

int ceil_log2(Int m) {
  int n = 0;
  while ((Int{1} << n) < m) ++n;
  return n;
}

bool is_power_of_two(Int m) { return m > 0 && (m & (m - 1)) == 0; }

AbelianSpec diagonal(const std::vector<Int>& free_and_moduli, std::size_t rank) {
  AbelianSpec s;
  s.rank = rank;
  for (std::size_t i = 0; i < free_and_moduli.size(); ++i) {
    if (free_and_moduli[i] == 0) continue;
    IntVector row(rank, 0);
    row[i] = static_cast<long>(free_and_moduli[i]);
    s.relations.push_back(row);
  }
  return s;
}

// |{(a, b) in Z x Z_m : |a| + |b|_m <= n}|, |b|_m the cyclic distance to 0.
Int z_times_cyclic_ball(Int m, Int n) {
  Int total = 0;
  for (Int b = 0; b < m; ++b) {
    Int d = std::min(b, m - b);
    if (d <= n) total += 2 * (n - d) + 1;
  }
  return total;
}

}  // namespace

CatalogEntry catalog_entry(const std::string& name) {
  CatalogEntry e;
  e.name = name;
  auto colon = name.find(':');
  std::string head = name.substr(0, colon);
  std::string arg = colon == std::string::npos ? "" : name.substr(colon + 1);
  auto need_arg = [&] {
    if (arg.empty()) throw ParseError("catalog name '" + name + "' needs a parameter");
  };
  auto no_arg = [&] {
    if (colon != std::string::npos) throw ParseError("catalog name '" + head + "' takes no parameter");
  };
  constexpr Int kMaxModulus = Int{1} << 30;

  if (head == "z" || head.rfind("z^", 0) == 0) {
    no_arg();
    Int d = head == "z" ? 1 : parse_int(head.substr(2), name, 1, 16);
    auto w = static_cast<std::size_t>(d);
    e.spec = AbelianSpec{w, {}};
    for (std::size_t i = 0; i < w; ++i) e.generators.push_back(unit(w, i));
    std::vector<Int> beta;
    for (long n = 0; n <= 3; ++n) beta.push_back(to_int(lattice_ball_size(static_cast<int>(d), n)));
    e.facts.push_back(fact(Kind::Profile, beta, FactSource::Closed, "l1 ball of Z^d", 3));
    e.facts.push_back(fact(Kind::Order, {}, FactSource::Closed, "torsion-free"));
    e.facts.push_back(fact(Kind::GrowthDegree, {d}, FactSource::Closed, "rank of Z^d"));
    e.facts.push_back(fact(Kind::RelationScales, {}, FactSource::Closed, "no relations", d == 1 ? 10 : d == 2 ? 6 : 3));
  } else if (head == "zmod") {
    need_arg();
    Int m = parse_int(arg, name, 2, kMaxModulus);
    e.spec = diagonal({m}, 1);
    e.generators = {Element{1}};
    std::vector<Int> beta;
    for (Int n = 0; n <= 10; ++n) beta.push_back(std::min(2 * n + 1, m));
    e.facts.push_back(fact(Kind::Profile, beta, FactSource::Closed, "min(2n+1, m)", 10));
    e.facts.push_back(fact(Kind::Order, {m}, FactSource::Closed, "cyclic of order m"));
    e.facts.push_back(fact(Kind::GrowthDegree, {0}, FactSource::Closed, "finite"));
    int s = ceil_log2(m);
    std::vector<Int> scales;
    if (s >= 2) scales.push_back(s);
    if (s + 1 <= 30)
      e.facts.push_back(fact(Kind::RelationScales, scales, FactSource::Closed,
                             "shortest relation t^m has length m", std::max(s + 1, 2)));
  } else if (head == "zxzmod") {
    need_arg();
    Int m = parse_int(arg, name, 2, kMaxModulus);
    e.spec = diagonal({0, m}, 2);
    e.generators = {unit(2, 0), unit(2, 1)};
    std::vector<Int> beta;
    for (Int n = 0; n <= 8; ++n) beta.push_back(z_times_cyclic_ball(m, n));
    e.facts.push_back(fact(Kind::Profile, beta, FactSource::Closed, "sum over the cyclic factor of 2(n-|b|)+1", 8));
    e.facts.push_back(fact(Kind::GrowthDegree, {1}, FactSource::Closed, "virtually Z"));
    if (m == 64)
      e.facts.push_back(fact(Kind::FitDegrees, {2, 1}, FactSource::Computed,
                             "planar growth until the cyclic factor saturates", 128, 1));
  } else if (head == "prod") {
    need_arg();
    auto ms = parse_list(arg, name, 2, kMaxModulus);
    if (ms.size() > 8) throw ParseError("at most 8 cyclic factors");
    e.spec = diagonal(ms, ms.size());
    for (std::size_t i = 0; i < ms.size(); ++i) e.generators.push_back(unit(ms.size(), i));
    BigInt order = 1;
    for (Int m : ms) order *= static_cast<long>(m);
    if (order.fits_slong_p())
      e.facts.push_back(fact(Kind::Order, {to_int(order)}, FactSource::Closed, "product of the moduli"));
    e.facts.push_back(fact(Kind::GrowthDegree, {0}, FactSource::Closed, "finite"));
    // Relations of l1 norm <= 2^n are spanned by the m_i e_i with m_i <= 2^n.
    std::vector<Int> scales;
    int top = 2;
    for (Int m : ms) {
      int s = ceil_log2(m);
      top = std::max(top, s + 1);
      if (s >= 2) scales.push_back(s);
    }
    std::sort(scales.begin(), scales.end());
    scales.erase(std::unique(scales.begin(), scales.end()), scales.end());
    bool powers = std::all_of(ms.begin(), ms.end(), is_power_of_two);
    if (powers && top <= 30)
      e.facts.push_back(fact(Kind::RelationScales, scales, FactSource::Closed,
                             "one scale per distinct 2-power modulus", top));
    if (ms == std::vector<Int>{4, 16, 64})
      e.facts.push_back(fact(Kind::FitDegrees, {3, 2, 1, 0}, FactSource::Computed,
                             "one degree drop as each cyclic factor saturates", 96, 1));
  } else if (head == "heisenberg" || head == "heisenberg-modz" || head == "heisenberg-modxz" ||
             head == "heisenberg-mod") {
    HeisenbergSpec s;
    if (head == "heisenberg") {
      no_arg();
    } else {
      need_arg();
      s.modulus = parse_int(arg, name, 2, kMaxModulus);
      s.quotient = head == "heisenberg-modz"    ? HeisenbergSpec::Quotient::Center
                   : head == "heisenberg-modxz" ? HeisenbergSpec::Quotient::XZ
                                                : HeisenbergSpec::Quotient::Full;
    }
    e.spec = s;
    e.generators = {unit(3, 0), unit(3, 1)};
    switch (s.quotient) {
      case HeisenbergSpec::Quotient::None:
        e.facts.push_back(fact(Kind::Profile, {1, 5, 17, 53, 135}, FactSource::Computed,
                               "unitriangular matrix model", 4));
        e.facts.push_back(fact(Kind::GrowthDegree, {4}, FactSource::Literature, "Bass-Guivarc'h degree 1*2 + 2*1"));
        break;
      case HeisenbergSpec::Quotient::Center:
        if (s.modulus == 4)
          e.facts.push_back(fact(Kind::Profile, {1, 5, 17, 53, 127, 219}, FactSource::Computed,
                                 "unitriangular matrix model with the corner entry mod 4", 5));
        e.facts.push_back(fact(Kind::GrowthDegree, {2}, FactSource::Closed, "virtually Z^2"));
        break;
      case HeisenbergSpec::Quotient::XZ:
        e.facts.push_back(fact(Kind::GrowthDegree, {1}, FactSource::Closed, "virtually Z"));
        break;
      case HeisenbergSpec::Quotient::Full:
        e.facts.push_back(fact(Kind::Order, {s.modulus * s.modulus * s.modulus}, FactSource::Closed, "m^3"));
        e.facts.push_back(fact(Kind::GrowthDegree, {0}, FactSource::Closed, "finite"));
        break;
    }
  } else if (head == "filiform") {
    need_arg();
    Int d = parse_int(arg, name, 2, 65);
    e.spec = FiliformSpec{static_cast<int>(d)};
    auto w = static_cast<std::size_t>(d);
    e.generators = {unit(w, 0), unit(w, w - 1)};
    e.facts.push_back(fact(Kind::GrowthDegree, {1 + d * (d - 1) / 2}, FactSource::Literature,
                           "Bass-Guivarc'h degree 1 + sum of 1..d-1"));
  } else if (head == "free") {
    need_arg();
    auto rc = parse_list(arg, name, 1, 12);
    if (rc.size() != 2) throw ParseError("free needs rank,class");
    e.spec = FreeNilpotentSpec{static_cast<int>(rc[0]), static_cast<int>(rc[1])};
    FreeNilpotentGroup g(static_cast<int>(rc[0]), static_cast<int>(rc[1]));
    for (int i = 0; i < rc[0]; ++i) e.generators.push_back(g.generator(i));
    e.facts.push_back(fact(Kind::GrowthDegree,
                           {static_cast<Int>(bass_guivarch_degree(static_cast<int>(rc[0]), static_cast<int>(rc[1])))},
                           FactSource::Literature, "sum of k times the Witt dimensions"));
    if (rc == std::vector<Int>{2, 2})
      e.facts.push_back(fact(Kind::Profile, {1, 5, 17, 53, 135}, FactSource::Computed,
                             "isomorphic to the Heisenberg group", 4));
  } else if (head == "semidirect") {
    need_arg();
    SemidirectSpec s;
    s.dimension = 2;
    if (arg == "pm") {
      s.matrices = {{{-1, 0}, {0, -1}}};
      e.generators = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
      e.facts.push_back(fact(Kind::Profile, {1, 6, 18, 38, 66, 102}, FactSource::Computed,
                             "affine integer matrix model", 5));
    } else if (arg == "d4") {
      s.matrices = {{{0, -1}, {1, 0}}, {{1, 0}, {0, -1}}};
      e.generators = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {0, 0, 2}};
      e.facts.push_back(fact(Kind::Profile, {1, 8, 31, 80, 160}, FactSource::Computed,
                             "affine integer matrix model", 4));
    } else {
      throw ParseError("unknown semidirect example '" + arg + "' (expected pm or d4)");
    }
    e.spec = s;
    e.facts.push_back(fact(Kind::Order, {}, FactSource::Closed, "contains Z^2"));
  } else {
    throw ParseError("unknown catalog name '" + name + "'");
  }
  return e;
}

std::vector<std::string> catalog_names() {
  return {"z",          "z^2",         "z^3",        "zmod:100",         "zmod:6",           "zxzmod:64",
          "prod:4,64",  "prod:4,16,64", "heisenberg", "heisenberg-modz:4", "heisenberg-modz:64", "heisenberg-modxz:8",
          "heisenberg-mod:5", "filiform:4", "free:2,2", "free:2,3",  "semidirect:pm",    "semidirect:d4"};
}

GeneratingSet catalog_generators(const CatalogEntry& e, const Group& g) {
  return standard_generators(g, e.generators);
}

std::vector<NamedProgression> catalog_progressions() {
  std::vector<NamedProgression> out;
  auto z = make_group(AbelianSpec{1, {}});
  auto z2 = make_group(AbelianSpec{2, {}});
  auto zxz64 = make_group(AbelianSpec{2, {{0, 64}}});
  auto heis = make_group(HeisenbergSpec{});
  auto heis16 = make_group(HeisenbergSpec{HeisenbergSpec::Quotient::Center, 16});
  auto free23 = make_group(FreeNilpotentSpec{2, 3});
  const Element x{1, 0, 0}, y{0, 1, 0}, c{0, 0, 1};
  out.push_back({"z:5", Progression(z, {{1}}, {5})});
  out.push_back({"z:1,3", Progression(z, {{1}, {3}}, {1, 1})});
  out.push_back({"z^2:2,3", Progression(z2, {{1, 0}, {0, 1}}, {2, 3})});
  out.push_back({"zxzmod:64:3,3", Progression(zxz64, {{1, 0}, {0, 1}}, {3, 3})});
  out.push_back({"heisenberg:1,1,1", Progression(heis, {x, y, c}, {1, 1, 1})});
  out.push_back({"heisenberg:nilpotent:2", nilpotent_progression(heis, {x, y}, {2, 2}, 2)});
  auto& f = dynamic_cast<const FreeNilpotentGroup&>(*free23);
  out.push_back({"free:2,3:nilpotent:1", nilpotent_progression(free23, {f.generator(0), f.generator(1)}, {1, 1}, 3)});
  out.push_back({"heisenberg-modz:16:lifted",
                 Progression(heis16, {x, y, c}, {1, 1, 1}, Projection{heis, {}, {}})});
  return out;
}

CheckResult verify_fact(const CatalogEntry& e, const CatalogFact& f, std::size_t cap) {
  CheckResult r;
  r.id = e.name + "/" + to_string(f.kind);
  auto g = make_group(e.spec);
  auto s = catalog_generators(e, *g);
  auto join = [](const std::vector<Int>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
    return out;
  };
  std::vector<Int> got;
  BallOptions opts;
  opts.cap = cap;
  switch (f.kind) {
    case Kind::Profile:
      got = ball_profile(*g, s, f.radius, opts).beta;
      break;
    case Kind::Order:
      if (auto o = g->order()) got = {to_int(*o)};
      break;
    case Kind::GrowthDegree:
      if (auto d = g->homogeneous_dimension()) got = {*d};
      else if (g->order()) got = {0};
      break;
    case Kind::FitDegrees: {
      auto fit = fit_growth(ball_profile(*g, s, f.radius, opts), f.anchor);
      got.assign(fit.f.degrees.begin(), fit.f.degrees.end());
      break;
    }
    case Kind::RelationScales: {
      auto* ab = dynamic_cast<const AbelianGroup*>(g.get());
      if (!ab) throw PreconditionError("relation scales are only computed for abelian groups");
      auto rs = new_relation_scales_abelian(*ab, s.elements, f.radius);
      got.assign(rs.scales.begin(), rs.scales.end());
      break;
    }
  }
  r.status = got == f.values ? CheckStatus::Pass : CheckStatus::Fail;
  r.detail = "expected [" + join(f.values) + "] got [" + join(got) + "] (" + to_string(f.source) + ": " + f.note + ")";
  return r;
}

}  // namespace growthlab
