#include <doctest.h>

#include <cmath>

#include "growthlab/growth.hpp"

using namespace growthlab;

TEST_CASE("box volumes") {
  CHECK(box_volume({{1, 0}, {0, 1}}, {1, 1}) == 4);
  CHECK(box_volume({{1, 0}, {1, 2}}, {1, 1}) == 8);
  for (int n : {1, 2, 5}) CHECK(box_volume({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, {n, n, n * n}) == 8 * n * n * n * n);
}

TEST_CASE("growth polynomials") {
  const auto f = growth_polynomial({{1, 0}, {0, 1}}, {1, 1}, {2, 3});
  REQUIRE(f.size() == 3);
  CHECK(f[2] == 24);
  CHECK(f[0] == 0);
  const auto h = growth_polynomial({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, {1, 1, 2}, {1, 1, 1});
  CHECK(h.back() == 8);
  CHECK(h.size() == 5);
  // a repeated vector only adds degenerate subsets
  const auto g = growth_polynomial({{1, 0}, {0, 1}, {1, 0}}, {1, 1, 1}, {1, 1, 1});
  CHECK(g[2] == 8);
  CHECK(evaluate(h, Rational(2)) == 128);
}

TEST_CASE("monomial envelopes") {
  const auto h = monomial_envelope({0, 4, 1});
  REQUIRE(h.pieces() == 2);
  CHECK(h.degrees == std::vector<int>{1, 2});
  CHECK(compare(Rational(4), h.boundaries[1]) == 0);
  CHECK(h.continuous());
  CHECK(h.value(Rational(2)) == 8);
  CHECK(h.value(Rational(6)) == 36);
  CHECK(monomial_envelope({0, 0, 0, 1}).pieces() == 1);
  const auto flat = monomial_envelope({1, 0, 0, 0, 1});
  CHECK(flat.pieces() == 1);
  CHECK(flat.degrees.front() == 4);
  // irrational crossing: 2x vs x^3 at sqrt(2)
  const auto r = monomial_envelope({0, 2, 0, 1});
  REQUIRE(r.pieces() == 2);
  CHECK(r.boundaries[1].root == 2);
  CHECK(r.continuous());
  CHECK_THROWS_AS(monomial_envelope({0, 0}), PreconditionError);
  CHECK(increase_bound(3) == 1);
  CHECK(increase_bound(4) == 4);
  CHECK(increase_bound(2) == 0);
}

TEST_CASE("fitting ball profiles") {
  BallProfile z;
  for (int n = 0; n <= 64; ++n) z.beta.push_back(2 * n + 1);
  const auto fz = fit_growth(z, 1);
  CHECK(fz.f.degrees == std::vector<int>{1});
  CHECK_THROWS_AS(fit_growth(z, 40), PreconditionError);

  // Z x Z/64: planar until the cyclic factor saturates
  BallProfile zz;
  for (Int n = 0; n <= 128; ++n) {
    Int s = 0;
    for (Int b = -32; b < 32; ++b) {
      const Int d = n - std::abs(b);
      if (d >= 0) s += 2 * d + 1;
    }
    zz.beta.push_back(s);
  }
  const auto fzz = fit_growth(zz, 1);
  CHECK(fzz.f.degrees == std::vector<int>{2, 1});
  CHECK(fzz.f.decreases() == 1);
}

TEST_CASE("doubling profile and lattice balls") {
  BallProfile p;
  for (int n = 0; n <= 6; ++n) p.beta.push_back(2 * n + 1);
  const auto d = doubling_profile(p);
  REQUIRE(d.size() >= 2);
  CHECK(d[0].n == 1);
  CHECK(d[0].doubling == Rational(5, 3));
  CHECK(d[0].tripling == Rational(7, 3));
  for (long m = 0; m < 10; ++m) CHECK(lattice_ball_size(2, m) == 2 * m * m + 2 * m + 1);
  CHECK(lattice_ball_size(3, 2) == 25);
}

TEST_CASE("lattice point counts against volume") {
  ConvexBody box;
  box.half_widths = {Rational(3, 2), Rational(1, 2)};
  const auto r = van_der_corput_check(box);
  CHECK(r.points == 3);
  CHECK(r.volume == 3);
  CHECK(r.holds);

  ConvexBody zon;
  zon.kind = ConvexBody::Kind::Zonotope;
  zon.rows = {{1, 0}, {0, 1}};
  const auto rz = van_der_corput_check(zon);
  CHECK(rz.points == 9);
  CHECK(rz.volume == 4);

  ConvexBody poly;
  poly.kind = ConvexBody::Kind::Polygon;
  poly.rows = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  const auto rp = van_der_corput_check(poly);
  CHECK(rp.points == 5);
  CHECK(rp.volume == 2);
}

TEST_CASE("Cramer selection") {
  const std::vector<RatVector> v{{1, 0}, {0, 1}, {1, 1}, {Rational(1, 2), 3}};
  const auto s = cramer_selection(v, {1, 1, 1, 1});
  CHECK(s.certified);
  CHECK(s.indices.size() == 2);
  for (const auto& c : s.coefficients)
    for (const auto& y : c) CHECK(abs_of(y) <= 1);
}

TEST_CASE("sumset and quotient bounds") {
  const auto z = make_group(AbelianSpec{1, {}});
  ElementSet a(1), b(1);
  for (Int x : {0, 1, 5}) a.insert(Element{x});
  for (Int x : {0, 10}) b.insert(Element{x});
  const auto r = sumset_lower_bound(*z, a, b);
  CHECK(r.product_size == 6);
  CHECK(r.bound == 4);
  CHECK(r.holds);

  const auto z2 = make_group(AbelianSpec{2, {}});
  const auto& ab = dynamic_cast<const AbelianGroup&>(*z2);
  const auto h = lattice_subgroup(ab, {{0, 1}});
  const auto q = quotient_kernel_bound(*z2, {{0, 0}, {1, 0}, {0, 1}, {-1, 0}, {0, -1}}, *h, 2, 2);
  CHECK(q.holds);
  CHECK(q.power_size == 41);
  CHECK(q.coset_count == 5);
  CHECK(q.slice_size == 5);
}
