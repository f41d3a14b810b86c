#include <doctest.h>

#include "growthlab/catalog.hpp"
#include "growthlab/io.hpp"

using namespace growthlab;

TEST_CASE("group specs round-trip through JSON") {
  const std::vector<GroupSpec> specs = {
      AbelianSpec{2, {{0, 64}}},
      FreeNilpotentSpec{2, 3},
      HeisenbergSpec{HeisenbergSpec::Quotient::XZ, 8},
      SemidirectSpec{2, {{{0, -1}, {1, 0}}}},
      FiniteTableSpec{{{0, 1}, {1, 0}}},
      FiliformSpec{4},
  };
  for (const auto& s : specs) {
    const auto j = to_json(s);
    const auto back = group_spec_from_json(parse_json(j.dump()));
    CHECK(to_json(back) == j);
    CHECK(make_group(back)->fingerprint() == make_group(s)->fingerprint());
  }
  GroupDocument doc{HeisenbergSpec{}, {{1, 0, 0}, {0, 1, 0}}};
  const auto back = group_document_from_json(to_json(doc));
  CHECK(back.generators == doc.generators);
}

TEST_CASE("malformed documents raise parse errors") {
  CHECK_THROWS_AS(parse_json("{\"family\": "), ParseError);
  CHECK_THROWS_AS(group_spec_from_json(parse_json("{\"family\": \"nonsense\"}")), ParseError);
  CHECK_THROWS_AS(group_spec_from_json(parse_json("{\"family\": \"abelian\", \"rank\": \"x\"}")), ParseError);
  CHECK_THROWS_AS(graph_from_json(parse_json("{\"adjacency\": [[1], []]}")), ParseError);
  CHECK_THROWS_AS(profile_from_csv("n,beta,sigma\n0,1,1\n1,5,3\n"), ParseError);
  CHECK_THROWS_AS(profile_from_csv("n,beta,sigma\n0,1,1\n2,5,4\n"), ParseError);
  CHECK_THROWS_AS(profile_from_csv("n,beta\n0,x\n"), ParseError);
  CHECK(profile_from_csv("n,beta\n0,1\n1,3\n").beta == std::vector<Int>{1, 3});
  CHECK_THROWS_AS(catalog_entry("zmod:"), ParseError);
}

TEST_CASE("profiles round-trip through CSV and JSON") {
  BallProfile p{"heisenberg", {1, 5, 17, 53}, false};
  const auto csv = profile_to_csv(p);
  CHECK(csv.rfind("n,beta,sigma\n0,1,1\n1,5,4\n", 0) == 0);
  CHECK(profile_from_csv(csv).beta == p.beta);
  CHECK(parse_profile(csv).beta == p.beta);
  const auto j = to_json(p).dump();
  CHECK(parse_profile(j) == p);
}

TEST_CASE("piecewise monomials and fits serialize exactly") {
  PiecewiseMonomial f;
  f.boundaries = {Radical{}, Radical{Rational(2), 2}};
  f.coefficients = {Rational(2), Rational(1)};
  f.degrees = {1, 3};
  const auto back = piecewise_from_json(parse_json(to_json(f).dump()));
  CHECK(back.degrees == f.degrees);
  CHECK(back.coefficients == f.coefficients);
  CHECK(compare(back.boundaries[1], f.boundaries[1]) == 0);
  CHECK(to_json(f)["coefficients"][0] == "2");

  BallProfile z{"z", {}, false};
  for (int n = 0; n <= 8; ++n) z.beta.push_back(2 * n + 1);
  const auto fit = fit_growth(z, 1);
  const auto csv = fit_to_csv(z, fit);
  CHECK(csv.rfind("m,beta,model\n", 0) == 0);
  CHECK(to_json(fit)["model"]["degrees"] == Json::array({1}));
}

TEST_CASE("graphs and elements") {
  const auto g = grid_graph(2, 2);
  const auto back = graph_from_json(to_json(g));
  CHECK(back.edges() == g.edges());
  CHECK(element_from_json(element_to_json({1, -2, 3}), 3) == Element{1, -2, 3});
  CHECK_THROWS_AS(element_from_json(Json::array({1, 2}), 3), ParseError);
}

TEST_CASE("catalog documents build their groups") {
  for (const auto& name : catalog_names()) {
    const auto e = catalog_entry(name);
    const auto doc = group_document_from_json(to_json(GroupDocument{e.spec, e.generators}));
    const auto g = make_group(doc.spec);
    CHECK(g->fingerprint() == make_group(e.spec)->fingerprint());
    for (const auto& x : doc.generators) CHECK(x.size() == g->width());
  }
  CHECK(catalog_entry("heisenberg-modz:4").name == "heisenberg-modz:4");
}
