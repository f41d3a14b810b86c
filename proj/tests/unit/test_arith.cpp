#include <doctest.h>

#include "growthlab/arith.hpp"
#include "growthlab/linalg.hpp"

using namespace growthlab;

TEST_CASE("rationals parse and print") {
  CHECK(parse_rational("3") == Rational(3));
  CHECK(parse_rational("-6/4") == Rational(-3, 2));
  CHECK(parse_rational("0.25") == Rational(1, 4));
  CHECK(to_string(Rational(-3, 2)) == "-3/2");
  CHECK(to_string(Rational(5)) == "5");
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("abc"), ParseError);
}

TEST_CASE("checked arithmetic reports overflow") {
  constexpr Int big = std::numeric_limits<Int>::max();
  CHECK_THROWS_AS(checked_add(big, 1), OverflowError);
  CHECK_THROWS_AS(checked_mul(big / 2 + 1, 2), OverflowError);
  CHECK(checked_sub(5, 7) == -2);
  CHECK(mod_floor(-7, 5) == 3);
  CHECK(floor_div(-7, 2) == -4);
  CHECK(floor_div(7, 2) == 3);
}

TEST_CASE("combinatorial helpers") {
  CHECK(binomial(10, 3) == 120);
  CHECK(binomial(4, 7) == 0);
  CHECK(factorial(10) == 3628800);
  CHECK(pow(Rational(2, 3), -2) == Rational(9, 4));
}

TEST_CASE("radicals compare exactly") {
  const Radical cube_root_2{Rational(2), 3};
  CHECK(compare(Rational(5, 4), cube_root_2) < 0);  // 125/64 < 2
  CHECK(compare(Rational(13, 10), cube_root_2) > 0);  // 2197/1000 > 2
  CHECK(compare(Rational(4), Radical{Rational(16), 2}) == 0);
  CHECK(compare(Radical{Rational(2), 2}, Radical{Rational(3), 3}) < 0);  // 2^(1/2) < 3^(1/3)
  CHECK(cube_root_2.to_double() == doctest::Approx(1.259921).epsilon(1e-6));
}

TEST_CASE("Hermite basis membership and index") {
  HermiteBasis h({{4, 0}, {0, 6}, {2, 3}}, 2);
  CHECK(h.rank() == 2);
  CHECK(h.index() == 12);  // gcd of 2x2 minors of the spanning set
  CHECK(h.contains({2, 3}));
  CHECK(h.contains({6, 3}));
  CHECK_FALSE(h.contains({1, 0}));
  CHECK(h.reduce({5, 7}) == h.reduce({1, 1}));
  HermiteBasis deficient({{1, 1}, {2, 2}}, 2);
  CHECK(deficient.rank() == 1);
  CHECK(deficient.index() == 0);
}

TEST_CASE("Smith invariants") {
  CHECK(smith_invariants({{2, 0}, {0, 3}}) == std::vector<BigInt>{1, 6});
  CHECK(smith_invariants({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}}) == std::vector<BigInt>{2, 6, 12});
  CHECK(smith_invariants({{0, 0}, {0, 0}}).empty());
}

TEST_CASE("rational linear algebra") {
  RatMatrix a{{2, 1}, {1, 3}};
  CHECK(determinant(a) == 5);
  CHECK(rank(RatMatrix{{1, 2}, {2, 4}}) == 1);
  const auto x = solve(a, {3, 5});
  CHECK(x == RatVector{Rational(4, 5), Rational(7, 5)});
  CHECK_THROWS_AS(solve(RatMatrix{{1, 2}, {2, 4}}, {1, 1}), PreconditionError);

  SparseRowSpace s;
  CHECK(s.add({{0, 1}, {2, 1}}));
  CHECK(s.add({{1, 1}}));
  CHECK_FALSE(s.add({{0, 2}, {1, -3}, {2, 2}}));
  CHECK(s.contains({{0, 1}, {1, 1}, {2, 1}}));
  CHECK_FALSE(s.contains({{2, 1}}));
  CHECK(s.rank() == 2);
}
