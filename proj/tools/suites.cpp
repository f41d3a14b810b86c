#include "suites.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>

#include "growthlab/catalog.hpp"
#include "growthlab/growth.hpp"
#include "growthlab/relations.hpp"
#include "growthlab/topology.hpp"

namespace growthlab::suites {

namespace {

CheckResult check(std::string id, bool ok, std::string detail = {}) {
  return {std::move(id), ok ? CheckStatus::Pass : CheckStatus::Fail, std::move(detail)};
}

std::string join(const std::vector<int>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out;
}

std::string radius_text(const Radius& r) { return r ? std::to_string(*r) : "unbounded"; }

Rational random_rational(std::mt19937_64& rng, int num_max, int den_max) {
  std::uniform_int_distribution<int> num(-num_max, num_max), den(1, den_max);
  Rational q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

}  // namespace

bool SuiteReport::ok() const { return failures() == 0; }

std::size_t SuiteReport::failures() const {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [](const CheckResult& c) { return c.status == CheckStatus::Fail; }));
}

std::vector<std::string> suite_names() {
  return {"sphere-bounds", "proper-center", "relation-scales", "catalog", "lemmas", "identities",
          "local-hom",     "h1",            "homotopy",        "witness", "truncated"};
}

std::vector<SuiteReport> run_suite(const std::string& name, std::uint64_t seed) {
  if (name == "all") {
    std::vector<SuiteReport> out;
    for (const auto& n : suite_names()) out.push_back(run_suite(n, seed).front());
    return out;
  }
  if (name == "sphere-bounds") return {sphere_bounds()};
  if (name == "proper-center") return {proper_center()};
  if (name == "relation-scales") return {relation_scales()};
  if (name == "catalog") return {catalog_facts()};
  if (name == "lemmas") return {lemmas(seed)};
  if (name == "identities") return {identities()};
  if (name == "local-hom") return {local_hom()};
  if (name == "h1") return {h1()};
  if (name == "homotopy") return {homotopy(seed)};
  if (name == "witness") return {witness()};
  if (name == "truncated") return {truncated()};
  throw ParseError("unknown suite: " + name);
}

// Every sphere below the diameter has at least two elements, and beta(n) >= |S| n / 3 up to the
// diameter, where |S| counts the identity.
SuiteReport sphere_bounds() {
  SuiteReport rep{"sphere-bounds", {}};
  for (const auto& name : catalog_names()) {
    const auto e = catalog_entry(name);
    const auto g = make_group(e.spec);
    const auto s = catalog_generators(e, *g);
    int radius = 8;
    bool finite = g->order().has_value();
    if (finite) radius = diameter(*g, s);
    const auto p = ball_profile(*g, s, radius);
    const Int size = static_cast<Int>(s.elements.size());
    bool spheres = true, balls = true;
    std::string where;
    for (int n = 1; n <= p.radius(); ++n) {
      if ((!finite || n < radius) && p.sphere(n) < 2) {
        spheres = false;
        where = "sphere " + std::to_string(n);
      }
      if (3 * p.beta[static_cast<std::size_t>(n)] < size * n) {
        balls = false;
        where = "ball " + std::to_string(n);
      }
    }
    std::ostringstream d;
    d << "radius " << p.radius() << (finite ? " (diameter)" : "") << ", |S| = " << size;
    if (!where.empty()) d << ", fails at " << where;
    rep.checks.push_back(check(name + "/spheres", spheres, d.str()));
    rep.checks.push_back(check(name + "/balls", balls, d.str()));
  }
  return rep;
}

std::vector<ProperCenterCase> proper_center_cases() {
  return {{"center", 16, 1}, {"center", 16, 2}, {"center", 64, 2}, {"xz", 8, 1}, {"xz", 12, 1},
          {"xz", 16, 1},     {"xz", 9, 2},      {"xz", 12, 2},     {"xz", 16, 2}};
}

// Class-2 Heisenberg quotients with all lengths >= m and inj above the threshold satisfy inj^Z >= m.
SuiteReport proper_center() {
  SuiteReport rep{"proper-center", {}};
  const auto lattice = make_group(HeisenbergSpec{});
  constexpr int kJmax = 12;
  for (const auto& c : proper_center_cases()) {
    HeisenbergSpec spec;
    spec.quotient = c.quotient == "xz" ? HeisenbergSpec::Quotient::XZ : HeisenbergSpec::Quotient::Center;
    spec.modulus = c.modulus;
    const auto ambient = make_group(spec);
    const Int l = c.length;
    Progression p(ambient, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, {l, l, l * l}, Projection{lattice, {}, {}});
    const Radius inj = injectivity_radius(p, kJmax);
    const Radius injz = inj_mod_center(p, kJmax);
    const Int m = l;
    const bool applies = !inj || *inj >= kProperCenterThreshold;
    const bool holds = !injz || *injz >= m;
    std::ostringstream d;
    d << "inj " << radius_text(inj) << ", inj^Z " << radius_text(injz) << ", m " << m
      << (applies ? "" : ", below threshold");
    rep.checks.push_back(check("heisenberg-mod" + c.quotient + ":" + std::to_string(c.modulus) +
                                   "/L=" + std::to_string(l),
                               !applies || holds, d.str()));
  }
  return rep;
}

SuiteReport relation_scales() {
  SuiteReport rep{"relation-scales", {}};
  struct Case {
    std::string name;
    int n_max;
    std::vector<int> expected;
  };
  const std::vector<Case> cases = {{"z", 8, {}},
                                   {"zmod:100", 8, {7}},
                                   {"zmod:6", 6, {3}},
                                   {"prod:4,64", 7, {2, 6}},
                                   {"prod:4,16", 6, {2, 4}},
                                   {"prod:4,16,64", 7, {2, 4, 6}},
                                   {"prod:8,32", 6, {3, 5}}};
  for (const auto& c : cases) {
    const auto e = catalog_entry(c.name);
    const auto g = make_group(e.spec);
    const auto& ab = dynamic_cast<const AbelianGroup&>(*g);
    const auto r = new_relation_scales_abelian(ab, e.generators, c.n_max);
    rep.checks.push_back(check(c.name, r.scales == c.expected,
                               "scales {" + join(r.scales) + "}, expected {" + join(c.expected) + "}"));
  }
  return rep;
}

SuiteReport catalog_facts() {
  SuiteReport rep{"catalog", {}};
  for (const auto& name : catalog_names()) {
    const auto e = catalog_entry(name);
    for (const auto& f : e.facts) rep.checks.push_back(verify_fact(e, f));
  }
  return rep;
}

SuiteReport lemmas(std::uint64_t seed) {
  SuiteReport rep{"lemmas", {}};
  std::mt19937_64 rng(seed);

  // |A + B| >= |A| + |B| - 1 in Z and Z^2
  {
    const auto z = make_group(AbelianSpec{1, {}});
    const auto z2 = make_group(AbelianSpec{2, {}});
    bool ok = true;
    std::string first;
    std::uniform_int_distribution<int> size(1, 12), coord(-20, 20);
    for (int t = 0; t < 50; ++t) {
      const auto& g = t % 2 ? *z2 : *z;
      auto draw = [&] {
        ElementSet s(g.width());
        const int n = size(rng);
        for (int i = 0; i < n; ++i) {
          Element e(g.width());
          for (auto& x : e) x = coord(rng);
          s.insert(e);
        }
        return s;
      };
      const auto a = draw(), b = draw();
      const auto r = sumset_lower_bound(g, a, b);
      if (!r.holds && ok) {
        ok = false;
        first = "trial " + std::to_string(t) + ": " + std::to_string(r.product_size) + " < " +
                std::to_string(r.bound);
      }
    }
    rep.checks.push_back(check("sumset", ok, ok ? "50 random pairs in Z and Z^2" : first));
  }

  // lattice points >= vol / 2^d
  {
    bool ok = true;
    std::string first;
    std::uniform_int_distribution<int> dim(1, 3), kind(0, 1), count(0, 2);
    for (int t = 0; t < 50; ++t) {
      ConvexBody k;
      const int d = dim(rng);
      if (kind(rng) == 0) {
        k.kind = ConvexBody::Kind::Box;
        for (int i = 0; i < d; ++i) k.half_widths.push_back(abs_of(random_rational(rng, 12, 4)));
      } else {
        k.kind = ConvexBody::Kind::Zonotope;
        const int n = d + count(rng);
        while (true) {
          k.rows.clear();
          for (int i = 0; i < n; ++i) {
            RatVector v;
            for (int j = 0; j < d; ++j) v.push_back(random_rational(rng, 4, 3));
            k.rows.push_back(v);
          }
          if (rank(k.rows) == static_cast<std::size_t>(d)) break;
        }
      }
      const auto r = van_der_corput_check(k);
      if (!r.holds && ok) {
        ok = false;
        first = "trial " + std::to_string(t) + ": " + r.points.get_str() + " points, volume " + to_string(r.volume);
      }
    }
    rep.checks.push_back(check("van-der-corput", ok, ok ? "50 random boxes and zonotopes, d <= 3" : first));
  }

  // Cramer selection coefficients bounded by 1
  {
    bool ok = true;
    std::string first;
    std::uniform_int_distribution<int> dim(1, 3), extra(0, 3);
    for (int t = 0; t < 50; ++t) {
      const int d = dim(rng);
      const int n = d + extra(rng);
      std::vector<RatVector> v;
      std::vector<Rational> m;
      while (true) {
        v.clear();
        m.clear();
        for (int i = 0; i < n; ++i) {
          RatVector x;
          for (int j = 0; j < d; ++j) x.push_back(random_rational(rng, 6, 4));
          v.push_back(x);
          m.push_back(abs_of(random_rational(rng, 5, 3)) + Rational(1, 2));
        }
        if (rank(v) == static_cast<std::size_t>(d)) break;
      }
      const auto s = cramer_selection(v, m);
      if (!s.certified && ok) {
        ok = false;
        first = "trial " + std::to_string(t);
      }
    }
    rep.checks.push_back(check("cramer", ok, ok ? "50 random instances in dimension <= 3" : first));
  }

  // h <= f <= T h for the monomial envelope, exactly at rational sample points
  {
    bool ok = true;
    std::string first;
    std::uniform_int_distribution<int> degree(0, 6), zero(0, 2), num(1, 30), den(1, 8), xnum(0, 4000);
    for (int t = 0; t < 100 && ok; ++t) {
      Polynomial f;
      const int deg = degree(rng);
      int terms = 0;
      for (int k = 0; k <= deg; ++k) {
        Rational a = zero(rng) == 0 ? Rational(0) : Rational(num(rng), den(rng));
        a.canonicalize();
        if (k == deg && a == 0) a = 1;
        terms += a != 0;
        f.push_back(a);
      }
      const auto h = monomial_envelope(f);
      for (int s = 0; s < 50; ++s) {
        Rational x(1000 + xnum(rng) * (s + 1), 1000);
        x.canonicalize();
        std::size_t piece = 0;
        for (std::size_t i = 1; i < h.pieces(); ++i)
          if (compare(x, h.boundaries[i]) >= 0) piece = i;
        const Rational hx = h.coefficients[piece] * pow(x, h.degrees[piece]);
        const Rational fx = evaluate(f, x);
        Rational top = 0;
        for (std::size_t k = 0; k < f.size(); ++k) top = std::max(top, Rational(f[k] * pow(x, static_cast<long>(k))));
        if (hx != top || hx > fx || fx > terms * hx) {
          ok = false;
          first = "polynomial " + std::to_string(t) + " at x = " + to_string(x);
          break;
        }
      }
    }
    rep.checks.push_back(check("envelope", ok, ok ? "100 random polynomials at 50 points each" : first));
  }
  return rep;
}

// P^-1 inside P^k and P(u; mL) inside P^k for the catalog progressions, m = 2.
SuiteReport identities() {
  SuiteReport rep{"identities", {}};
  for (const auto& np : catalog_progressions()) {
    const auto r = progression_identities_check(np.progression, 2);
    rep.checks.push_back(check(np.name, r.ok,
                               "inverse in P^" + std::to_string(r.inverse_power) + ", dilate in P^" +
                                   std::to_string(r.dilation_power)));
  }
  return rep;
}

SuiteReport local_hom() {
  SuiteReport rep{"local-hom", {}};
  const auto z = make_group(AbelianSpec{1, {}});

  // psi: Z/7 -> {-3..3} is not a local homomorphism: psi(3) + psi(1) = 4 but psi(4) = -3
  {
    const auto z7 = make_group(AbelianSpec{1, {{7}}});
    LocalMap psi{z7, z, {}};
    std::vector<Element> a;
    for (Int k = 0; k < 7; ++k) {
      psi.table[{k}] = {k <= 3 ? k : k - 7};
      a.push_back({k});
    }
    const auto r = local_hom_check(psi, a);
    const bool found = std::find(r.failures.begin(), r.failures.end(),
                                 std::pair<Element, Element>{{3}, {1}}) != r.failures.end();
    rep.checks.push_back(check("symmetric-residues", !r.holds && found,
                               std::to_string(r.failures.size()) + " failing pairs, (3, 1) among them: " +
                                   (found ? "yes" : "no")));
  }

  // restriction of Z -> Z/m to {-t..t} with 2t <= ... is a local homomorphism, and pullbacks are subgroups
  for (Int m : {5, 8, 12}) {
    const auto zm = make_group(AbelianSpec{1, {{BigInt(static_cast<long>(m))}}});
    const Int t = m;
    LocalMap phi{z, zm, {}};
    std::vector<Element> a;
    for (Int k = -2 * t; k <= 2 * t; ++k) phi.table[{k}] = zm->canonical({k});
    for (Int k = -t; k <= t; ++k) a.push_back({k});
    const auto r = local_hom_check(phi, a);
    rep.checks.push_back(check("reduction-mod-" + std::to_string(m), r.holds && r.domain_ok));
  }
  {
    const auto z7 = make_group(AbelianSpec{1, {{7}}});
    LocalMap phi{z, z7, {}};
    std::vector<Element> a;
    for (Int k = -3; k <= 3; ++k) {
      phi.table[{k}] = z7->canonical({k});
      a.push_back({k});
    }
    const auto pb = pullback_subgroup(phi, a, {z7->identity()});
    rep.checks.push_back(check("pullback-trivial", pb.certified && pb.elements.size() == 1 &&
                                                       z->is_identity(pb.elements.front())));
  }
  return rep;
}

SuiteReport h1() {
  SuiteReport rep{"h1", {}};
  for (std::size_t n : {5, 8, 12}) {
    const auto g = cycle_graph(n);
    bool ok = true;
    std::string ranks;
    for (int k = 3; k <= static_cast<int>(n) + 1; ++k) {
      const auto r = pk_h1_rank(g, k);
      ranks += (k > 3 ? "," : "") + std::to_string(r);
      ok = ok && r == (k < static_cast<int>(n) ? 1u : 0u);
    }
    rep.checks.push_back(check("cycle:" + std::to_string(n), ok, "ranks for k = 3.." + std::to_string(n + 1) + ": " + ranks));
  }
  {
    const auto r = pk_h1(grid_graph(3, 3), 4);
    rep.checks.push_back(check("grid:3,3/k=4", r.rank == 0 && r.torsion.empty(),
                               "rank " + std::to_string(r.rank) + ", cycle rank " + std::to_string(r.cycle_rank)));
  }
  {
    const auto r = pk_h1(complete_graph(4), 3);
    rep.checks.push_back(check("complete:4/k=3", r.rank == 0, "rank " + std::to_string(r.rank)));
  }
  {
    // the Cayley graph of Z/5 x Z/5 is a torus: squares leave the two essential loops of length 5
    const auto e = catalog_entry("prod:5,5");
    const auto g = make_group(e.spec);
    const auto c = cayley_graph(*g, catalog_generators(e, *g));
    const auto r4 = pk_h1_rank(c.graph, 4), r5 = pk_h1_rank(c.graph, 5);
    rep.checks.push_back(check("torus:5,5", r4 == 2 && r5 == 0,
                               "rank " + std::to_string(r4) + " at k=4, " + std::to_string(r5) + " at k=5"));
  }
  return rep;
}

// Random pairs of paths with common endpoints in grid graphs, where squares fill all of H1.
SuiteReport homotopy(std::uint64_t seed) {
  SuiteReport rep{"homotopy", {}};
  std::mt19937_64 rng(seed);
  const std::size_t rows = 4, cols = 4;
  const auto g = grid_graph(rows, cols);
  const bool filled = pk_h1_rank(g, 4) == 0;
  rep.checks.push_back(check("grid:4,4/h1", filled));

  auto random_path = [&](std::size_t from, std::size_t to) {
    // monotone lattice path with an occasional back-and-forth detour
    CPath p{from};
    std::size_t r = from / cols, c = from % cols;
    const std::size_t tr = to / cols, tc = to % cols;
    std::bernoulli_distribution coin(0.5), detour(0.15);
    while (r != tr || c != tc) {
      const bool move_row = (r != tr) && (c == tc || coin(rng));
      if (move_row) r = r < tr ? r + 1 : r - 1;
      else c = c < tc ? c + 1 : c - 1;
      p.push_back(r * cols + c);
      if (detour(rng)) {
        const auto& nb = g.neighbors(p.back());
        const std::size_t side = nb[std::uniform_int_distribution<std::size_t>(0, nb.size() - 1)(rng)];
        p.push_back(side);
        p.push_back(r * cols + c);
      }
    }
    return p;
  };

  std::uniform_int_distribution<std::size_t> vertex(0, rows * cols - 1);
  int equivalent = 0, unknown = 0, contradictions = 0;
  for (int t = 0; t < 50; ++t) {
    std::size_t u = vertex(rng), v = vertex(rng);
    while (g.distances(u)[v] > 4) v = vertex(rng);
    const CPath p = random_path(u, v), q = random_path(u, v);
    const auto r = cpath_equivalent(g, p, q, 1, 4);
    if (r.verdict == PathVerdict::Equivalent) {
      ++equivalent;
      for (std::size_t i = 0; i + 1 < r.chain.size(); ++i)
        if (!is_elementary_move(g, r.chain[i], r.chain[i + 1], 1, 4)) ++contradictions;
    } else if (r.verdict == PathVerdict::Unknown) {
      ++unknown;
    } else {
      ++contradictions;
    }
  }
  rep.checks.push_back(check("grid:4,4/pairs", contradictions == 0 && unknown == 0,
                             std::to_string(equivalent) + " equivalent, " + std::to_string(unknown) + " unknown, " +
                                 std::to_string(contradictions) + " contradicting H1 = 0 or invalid chains"));

  // two arcs of a 12-cycle differ by the essential loop
  const auto c12 = cycle_graph(12);
  CPath a{0, 1, 2, 3, 4, 5, 6}, b{0, 11, 10, 9, 8, 7, 6};
  const auto r = cpath_equivalent(c12, a, b, 1, 4);
  rep.checks.push_back(check("cycle:12/arcs", r.verdict == PathVerdict::NotEquivalentByH1, to_string(r.verdict)));
  return rep;
}

SuiteReport witness() {
  SuiteReport rep{"witness", {}};
  for (const auto& name : example_witness_names()) {
    const auto r = verify_witness(example_witness(name));
    std::string failing;
    for (const auto& f : r.failing()) failing += (failing.empty() ? "" : ",") + f;
    rep.checks.push_back(check(name, r.ok(), failing.empty() ? "all applicable conclusions hold" : "failing " + failing));
  }
  const std::map<std::string, std::string> expected = {{"scale", "scales"},     {"eta", "i"},
                                                        {"map", "viii"},        {"inj-constant", "ix"},
                                                        {"dim-constant", "xii"}, {"hdim-constant", "xiii"}};
  const auto base = example_witness("zxz64");
  for (const auto& field : witness_corruptions()) {
    const auto r = verify_witness(corrupt_witness(base, field));
    const auto failing = r.failing();
    std::string text;
    for (const auto& f : failing) text += (text.empty() ? "" : ",") + f;
    const bool ok = failing.size() == 1 && failing.front() == expected.at(field);
    rep.checks.push_back(check("corrupt:" + field, ok, "failing {" + text + "}"));
  }
  return rep;
}

// Balls of <S | relations of length <= r> agree with the group up to radius r/2 for finite catalog groups.
SuiteReport truncated() {
  SuiteReport rep{"truncated", {}};
  for (const auto& name : catalog_names()) {
    const auto e = catalog_entry(name);
    const auto g = make_group(e.spec);
    const auto s = catalog_generators(e, *g);
    const bool finite = g->order().has_value();
    const int r = finite ? 2 * diameter(*g, s) : 8;
    const int radius = std::min(r / 2, 8);
    const auto t = truncated_presentation_ball(*g, s, r, radius);
    const auto direct = ball_profile(*g, s, radius);
    rep.checks.push_back(check(name + "/r=" + std::to_string(r), t.profile.beta == direct.beta,
                               "radius " + std::to_string(radius)));
  }
  {
    bool rejected = false;
    const auto e = catalog_entry("zmod:100");
    const auto g = make_group(e.spec);
    try {
      truncated_presentation_ball(*g, catalog_generators(e, *g), 8, 5);
    } catch (const PreconditionError&) {
      rejected = true;
    }
    rep.checks.push_back(check("zmod:100/radius-above-half", rejected, "R = 5 > r/2 = 4 is unsupported"));
  }
  return rep;
}

}  // namespace growthlab::suites
