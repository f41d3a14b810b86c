#include <doctest.h>

#include <random>
#include <set>

#include "../oracles.hpp"
#include "growthlab/ball.hpp"
#include "growthlab/group.hpp"

using namespace growthlab;

namespace {

oracle::Mat3 heisenberg_matrix(const Element& e) {
  // x^a y^b z^c with z = [y, x]
  const auto z = oracle::commutator(oracle::mat_y(), oracle::mat_x());
  return oracle::power(oracle::mat_x(), e[0]) * oracle::power(oracle::mat_y(), e[1]) * oracle::power(z, e[2]);
}

void check_axioms(const Group& g, const std::vector<Element>& sample) {
  const Element one = g.identity();
  for (const auto& a : sample) {
    CHECK(g.multiply(a, one) == a);
    CHECK(g.multiply(one, a) == a);
    CHECK(g.is_identity(g.multiply(a, g.inverse(a))));
    for (const auto& b : sample)
      for (const auto& c : sample) CHECK(g.multiply(g.multiply(a, b), c) == g.multiply(a, g.multiply(b, c)));
  }
}

std::vector<Element> ball_elements(const Group& g, int radius) {
  const auto s = standard_generators(g, default_generators(g));
  const auto b = grow_ball(g, {g.identity()}, s.elements, radius);
  return b.elements.elements();
}

}  // namespace

TEST_CASE("Heisenberg law agrees with unitriangular matrices") {
  const auto g = make_group(HeisenbergSpec{});
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<Int> c(-6, 6);
  for (int t = 0; t < 300; ++t) {
    const Element a{c(rng), c(rng), c(rng)}, b{c(rng), c(rng), c(rng)};
    CHECK(heisenberg_matrix(g->multiply(a, b)) == heisenberg_matrix(a) * heisenberg_matrix(b));
    CHECK(heisenberg_matrix(g->inverse(a)) == oracle::inverse(heisenberg_matrix(a)));
  }
  CHECK(g->commutator({0, 1, 0}, {1, 0, 0}) == Element{0, 0, 1});
  CHECK(g->homogeneous_dimension() == 4);
}

TEST_CASE("Heisenberg quotients") {
  HeisenbergSpec spec{HeisenbergSpec::Quotient::Center, 4};
  const auto g = make_group(spec);
  CHECK(g->canonical({1, 2, 9}) == Element{1, 2, 1});
  CHECK(g->homogeneous_dimension() == 2);
  const auto full = make_group(HeisenbergSpec{HeisenbergSpec::Quotient::Full, 5});
  CHECK(full->order() == 125);
  CHECK_THROWS_AS(make_group(HeisenbergSpec{HeisenbergSpec::Quotient::Center, 0}), PreconditionError);
  check_axioms(*make_group(HeisenbergSpec{HeisenbergSpec::Quotient::XZ, 6}),
               ball_elements(*make_group(HeisenbergSpec{HeisenbergSpec::Quotient::XZ, 6}), 2));
}

TEST_CASE("abelian groups reduce modulo their relation lattice") {
  const auto g = make_group(AbelianSpec{2, {{0, 64}}});
  CHECK(g->canonical({3, 65}) == Element{3, 1});
  CHECK(g->canonical({3, -1}) == Element{3, 63});
  CHECK_FALSE(g->order().has_value());
  CHECK(g->hirsch_length() == 1);
  const auto zm = make_group(AbelianSpec{1, {{6}}});
  CHECK(zm->order() == 6);
  CHECK(zm->multiply({4}, {5}) == Element{3});
}

TEST_CASE("ball profiles of small groups") {
  const auto z = make_group(AbelianSpec{1, {}});
  CHECK(ball_profile(*z, standard_generators(*z, {{1}}), 3).beta == std::vector<Int>{1, 3, 5, 7});
  const auto z6 = make_group(AbelianSpec{1, {{6}}});
  const auto p = ball_profile(*z6, standard_generators(*z6, {{1}}), 10);
  CHECK(p.beta.back() == 6);
  CHECK(p.sphere(3) == 1);
  const auto h = make_group(HeisenbergSpec{});
  CHECK(ball_profile(*h, standard_generators(*h, default_generators(*h)), 2).beta == std::vector<Int>{1, 5, 17});
  CHECK(diameter(*z6, standard_generators(*z6, {{1}})) == 3);
}

TEST_CASE("parallel and serial enumeration agree") {
  const auto h = make_group(HeisenbergSpec{});
  const auto s = standard_generators(*h, default_generators(*h));
  const auto par = grow_ball(*h, {h->identity()}, s.elements, 9);
  const auto ser = grow_ball_serial(*h, {h->identity()}, s.elements, 9);
  REQUIRE(par.layer_end.size() == ser.layer_end.size());
  CHECK(par.layer_end == ser.layer_end);
  std::set<Element> a, b;
  for (std::size_t i = 0; i < par.elements.size(); ++i) a.insert(par.elements.element(i));
  for (std::size_t i = 0; i < ser.elements.size(); ++i) b.insert(ser.elements.element(i));
  CHECK(a == b);
  for (std::size_t i = 0; i < par.elements.size(); ++i) CHECK(par.layer_of(par.elements.element(i)) == ser.layer_of(par.elements.element(i)));

  const auto x = make_set(*h, ball_elements(*h, 3));
  const auto y = make_set(*h, ball_elements(*h, 2));
  const auto pp = product_set(*h, x, y), ps = product_set_serial(*h, x, y);
  CHECK(pp.size() == ps.size());
  CHECK(pp.size() == ball_profile(*h, s, 5).beta.back());
}

TEST_CASE("ball enumeration respects the cap") {
  const auto h = make_group(HeisenbergSpec{});
  BallOptions opts;
  opts.cap = 100;
  const auto p = ball_profile(*h, standard_generators(*h, default_generators(*h)), 10, opts);
  CHECK(p.truncated);
  CHECK(p.radius() < 10);
}

TEST_CASE("generating sets") {
  const auto h = make_group(HeisenbergSpec{});
  GeneratingSet s{{{1, 0, 0}, {0, 1, 0}, {1, 0, 0}}};
  const auto sym = s.symmetrized(*h);
  CHECK(sym.elements.size() == 5);
  CHECK(sym.is_symmetric(*h));
  CHECK(sym.contains_identity(*h));
  CHECK_FALSE(s.is_symmetric(*h));
  CHECK(evaluate_word(*h, {{1, 0, 0}, {0, 1, 0}}, {-2, -1, 2, 1}) == Element{0, 0, 1});
}

TEST_CASE("semidirect, filiform and table groups satisfy the group axioms") {
  SemidirectSpec pm{2, {{{-1, 0}, {0, -1}}}};
  const auto sd = make_group(pm);
  check_axioms(*sd, ball_elements(*sd, 2));
  CHECK(sd->multiply({1, 2, 1}, {3, 4, 0}) == Element{-2, -2, 1});
  const auto fil = make_group(FiliformSpec{4});
  check_axioms(*fil, ball_elements(*fil, 2));
  CHECK(fil->homogeneous_dimension() == 7);
  CHECK_THROWS_AS(make_group(FiliformSpec{1}), PreconditionError);

  // S_3 as permutations of {0,1,2}, listed as id, (01), (02), (12), (012), (021)
  FiniteTableSpec s3{{{0, 1, 2, 3, 4, 5},
                      {1, 0, 5, 4, 3, 2},
                      {2, 4, 0, 5, 1, 3},
                      {3, 5, 4, 0, 2, 1},
                      {4, 2, 3, 1, 5, 0},
                      {5, 3, 1, 2, 0, 4}}};
  const auto t = make_group(s3);
  CHECK(t->order() == 6);
  CHECK_FALSE(t->is_abelian());
  std::vector<Element> all;
  for (Int i = 0; i < 6; ++i) all.push_back({i});
  check_axioms(*t, all);
  CHECK_THROWS(make_group(FiniteTableSpec{{{0, 1}, {0, 1}}}));
}
