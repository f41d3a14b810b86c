#include <doctest.h>

#include <numeric>

#include "growthlab/relations.hpp"

using namespace growthlab;

namespace {

// All relation vectors of l1 norm <= bound, by exhaustive search.
IntMatrix brute_relations(const Group& g, const std::vector<Element>& letters, long bound) {
  const std::size_t t = letters.size();
  IntMatrix out;
  std::vector<Int> v(t, -bound);
  while (true) {
    Int norm = 0;
    for (Int x : v) norm += std::abs(x);
    if (norm <= bound && norm > 0) {
      Element e = g.identity();
      for (std::size_t i = 0; i < t; ++i) e = g.multiply(e, g.power(letters[i], v[i]));
      if (g.is_identity(e)) {
        IntVector row;
        for (Int x : v) row.push_back(BigInt(static_cast<long>(x)));
        out.push_back(row);
      }
    }
    std::size_t i = 0;
    while (i < t && v[i] == bound) v[i++] = -bound;
    if (i == t) break;
    ++v[i];
  }
  return out;
}

// Index of the lattice spanned by two-dimensional rows: gcd of all 2x2 minors.
BigInt minor_gcd(const IntMatrix& rows) {
  BigInt g = 0;
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = i + 1; j < rows.size(); ++j) {
      BigInt m = rows[i][0] * rows[j][1] - rows[i][1] * rows[j][0];
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), m.get_mpz_t());
    }
  return g;
}

}  // namespace

TEST_CASE("relation lattices agree with exhaustive search") {
  struct Case {
    AbelianSpec spec;
    std::vector<Element> letters;
  };
  const std::vector<Case> cases = {
      {{1, {{6}}}, {{1}}},
      {{1, {{12}}}, {{2}, {3}}},
      {{2, {{4, 0}, {0, 8}}}, {{1, 0}, {0, 1}}},
      {{1, {{10}}}, {{1}, {4}}},
  };
  for (const auto& c : cases) {
    const auto g = make_group(c.spec);
    const auto& ab = dynamic_cast<const AbelianGroup&>(*g);
    const auto r = new_relation_scales_abelian(ab, c.letters, 4);
    REQUIRE(r.lattices.size() == 4);
    std::vector<int> scales;
    for (int n = 1; n <= 4; ++n) {
      const auto rows = brute_relations(*g, c.letters, 1L << n);
      const HermiteBasis expected(rows, c.letters.size());
      CHECK(r.lattices[static_cast<std::size_t>(n - 1)] == expected);
      if (c.letters.size() == 2 && expected.rank() == 2) CHECK(expected.index() == abs(minor_gcd(rows)));
      if (n >= 2 && !(r.lattices[static_cast<std::size_t>(n - 1)] == r.lattices[static_cast<std::size_t>(n - 2)]))
        scales.push_back(n);
    }
    CHECK(r.scales == scales);
  }
}

TEST_CASE("known relation scales") {
  auto scales = [](AbelianSpec spec, std::vector<Element> letters, int n_max) {
    const auto g = make_group(spec);
    return new_relation_scales_abelian(dynamic_cast<const AbelianGroup&>(*g), letters, n_max).scales;
  };
  CHECK(scales({1, {{100}}}, {{1}}, 8) == std::vector<int>{7});
  CHECK(scales({2, {{4, 0}, {0, 64}}}, {{1, 0}, {0, 1}}, 7) == std::vector<int>{2, 6});
  CHECK(scales({1, {}}, {{1}}, 8).empty());
  CHECK(scales({3, {{4, 0, 0}, {0, 16, 0}, {0, 0, 64}}}, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, 7) ==
        std::vector<int>{2, 4, 6});
}

TEST_CASE("relation enumeration honours its cap") {
  const auto g = make_group(AbelianSpec{3, {}});
  CHECK_THROWS_AS(new_relation_scales_abelian(dynamic_cast<const AbelianGroup&>(*g),
                                              {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, 12, 1000),
                  ResourceError);
}
