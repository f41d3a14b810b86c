#include <doctest.h>

#include <set>

#include "growthlab/progression.hpp"

using namespace growthlab;

namespace {

GroupPtr heisenberg() { return make_group(HeisenbergSpec{}); }
const Element kX{1, 0, 0}, kY{0, 1, 0}, kZ{0, 0, 1};

// P^n by repeated brute-force products.
std::set<Element> brute_power(const Group& g, const std::vector<Element>& p, int n) {
  std::set<Element> cur{g.identity()};
  for (int i = 0; i < n; ++i) {
    std::set<Element> next;
    for (const auto& a : cur)
      for (const auto& b : p) next.insert(g.multiply(a, b));
    cur = std::move(next);
  }
  return cur;
}

}  // namespace

TEST_CASE("progressions enumerate products of powers") {
  const auto g = heisenberg();
  const Progression p(g, {kX, kY, kZ}, {1, 1, 1});
  CHECK(p.enumerate().size() == 27);
  CHECK(p.bounds() == std::vector<Int>{1, 1, 1});
  CHECK(Progression(g, {kX, kY}, {Rational(5, 2), 1}).bounds() == std::vector<Int>{2, 1});
  const auto z = make_group(AbelianSpec{1, {}});
  CHECK(Progression(z, {{1}, {3}}, {1, 1}).enumerate().size() == 9);
  CHECK(Progression(z, {{1}, {2}}, {1, 1}).enumerate().size() == 7);
  CHECK(p.scaled(2).lengths() == std::vector<Rational>{2, 2, 2});
}

TEST_CASE("powers of a progression match brute-force products") {
  const auto g = heisenberg();
  const Progression p(g, {kX, kY, kZ}, {1, 1, 1});
  const auto elems = p.enumerate().elements();
  const auto ball = progression_powers(p, 3);
  for (int n = 0; n <= 3; ++n)
    CHECK(static_cast<std::size_t>(ball.profile("").beta[static_cast<std::size_t>(n)]) ==
          brute_power(*g, elems, n).size());
}

TEST_CASE("upper-triangular form of Heisenberg progressions") {
  const auto g = heisenberg();
  const auto r = check_upper_triangular(Progression(g, {kX, kY, kZ}, {2, 2, 4}));
  CHECK(r.ok);
  CHECK(r.constant == 1);
  CHECK(zeta_weights(3, r.expressions) == std::vector<int>{1, 1, 2});
  // a tail that is too short forces a larger constant
  const auto r2 = check_upper_triangular(Progression(g, {kX, kY, kZ}, {2, 2, 1}));
  CHECK(r2.ok);
  CHECK(r2.constant == 4);
  // z must come after x and y
  const auto bad = check_upper_triangular(Progression(g, {kZ, kX, kY}, {1, 1, 1}));
  CHECK_FALSE(bad.ok);
}

TEST_CASE("nilpotent progressions use weighted lengths") {
  const auto g = heisenberg();
  const auto p = nilpotent_progression(g, {kX, kY}, {3, 2}, 2);
  REQUIRE(p.dimension() == 3);
  CHECK(p.lengths()[2] == 6);
  CHECK(g->commute(p.generators()[2], kX));
  CHECK(check_upper_triangular(p).ok);
  const auto zeta = zeta_weights(3, check_upper_triangular(p).expressions);
  CHECK(dilation_constant(p, zeta, 4).has_value());
}

TEST_CASE("injectivity radius of Z -> Z/m matches the closed form") {
  const auto z = make_group(AbelianSpec{1, {}});
  for (Int m : {7, 10, 12}) {
    const auto zm = make_group(AbelianSpec{1, {{BigInt(static_cast<long>(m))}}});
    for (Int l : {1, 2, 3, 5}) {
      const Progression p(zm, {{1}}, {l}, Projection{z, {}, {}});
      const Int expected = (m + l - 1) / l - 1;
      CHECK(injectivity_radius(p, 64) == static_cast<int>(expected));
    }
  }
  const auto zm = make_group(AbelianSpec{1, {{10}}});
  CHECK(injectivity_radius(Progression(zm, {{1}}, {3}, Projection{z, {}, {}}), 64) == 3);
}

TEST_CASE("injectivity radius modulo the center") {
  const auto lattice = heisenberg();
  const auto modz = make_group(HeisenbergSpec{HeisenbergSpec::Quotient::Center, 16});
  const Progression central(modz, {kX, kY, kZ}, {1, 1, 1}, Projection{lattice, {}, {}});
  CHECK(injectivity_radius(central, 40).has_value());
  CHECK_FALSE(inj_mod_center(central, 40).has_value());  // kernel is central
  const auto modxz = make_group(HeisenbergSpec{HeisenbergSpec::Quotient::XZ, 8});
  const Progression p(modxz, {kX, kY, kZ}, {1, 1, 1}, Projection{lattice, {}, {}});
  const auto injz = inj_mod_center(p, 12);
  REQUIRE(injz.has_value());
  CHECK(*injz >= 1);
  CHECK(*injz < 8);
}

TEST_CASE("symmetry set and finite subgroups") {
  const auto z6 = make_group(AbelianSpec{1, {{6}}});
  // P = all of Z/6 is stabilized by everything
  CHECK(symmetry_set(Progression(z6, {{1}}, {3})).size() == 6);
  CHECK(symmetry_set(Progression(z6, {{1}}, {1})).size() == 1);

  const auto z = make_group(AbelianSpec{1, {}});
  const auto z2xz = make_group(AbelianSpec{2, {{2, 0}}});
  // lattice Z^2 -> Z/2 x Z with symmetry H = Z/2 x 0
  const auto lat = make_group(AbelianSpec{2, {}});
  Projection proj{lat, {}, {{0, 0}, {1, 0}}};
  const Progression p(z2xz, {{0, 1}}, {4}, proj);
  const auto r = finite_subgroup_in_power(p, {{0, 0}, {1, 0}}, 16);
  CHECK(r.precondition);
  CHECK(r.contained);
  (void)z;
}

TEST_CASE("approximate-group diagnostics of intervals") {
  const auto z = make_group(AbelianSpec{1, {}});
  const auto a = Progression(z, {{1}}, {5}).enumerate();
  const auto d = approx_diagnostics(*z, a);
  CHECK(d.doubling == Rational(21, 11));
  CHECK(d.tripling == Rational(31, 11));
  CHECK(d.greedy_cover >= 2);
  CHECK(d.greedy_cover <= 3);
}

TEST_CASE("inverse and dilation identities") {
  const auto g = heisenberg();
  const auto r = progression_identities_check(Progression(g, {kX, kY, kZ}, {1, 1, 1}), 2);
  CHECK(r.ok);
  CHECK(r.inverse_power >= 1);
  CHECK(r.dilation_power >= 2);
}
