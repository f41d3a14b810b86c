#include <doctest.h>

#include <map>
#include <random>

#include "../oracles.hpp"
#include "growthlab/ball.hpp"
#include "growthlab/free_nilpotent.hpp"

using namespace growthlab;

namespace {

// Necklace-counting oracle for the Witt dimensions: (1/k) sum_{d | k} mu(d) r^{k/d}.
long witt_oracle(int r, int k) {
  auto mobius = [](int n) {
    int m = 1;
    for (int p = 2; p * p <= n; ++p)
      if (n % p == 0) {
        n /= p;
        if (n % p == 0) return 0;
        m = -m;
      }
    return n > 1 ? -m : m;
  };
  long s = 0;
  for (int d = 1; d <= k; ++d)
    if (k % d == 0) {
      long p = 1;
      for (int i = 0; i < k / d; ++i) p *= r;
      s += mobius(d) * p;
    }
  return s / k;
}

std::vector<int> random_word(std::mt19937_64& rng, int max_len) { return oracle::random_word(rng, 2, max_len); }

}  // namespace

TEST_CASE("Witt dimensions and Hall basis sizes") {
  for (int r = 1; r <= 4; ++r)
    for (int k = 1; k <= 6; ++k) CHECK(witt_dimension(r, k) == witt_oracle(r, k));
  for (int r = 2; r <= 3; ++r)
    for (int c = 1; c <= 4; ++c) {
      const HallBasis b(r, c);
      long expected = 0;
      for (int k = 1; k <= c; ++k) expected += witt_oracle(r, k);
      CHECK(static_cast<long>(b.size()) == expected);
      const auto counts = b.weight_counts();
      for (int k = 1; k <= c; ++k) CHECK(counts[static_cast<std::size_t>(k - 1)] == witt_oracle(r, k));
    }
  CHECK(bass_guivarch_degree(2, 2) == 4);
  CHECK(bass_guivarch_degree(2, 3) == 10);
  CHECK(bass_guivarch_degree(3, 2) == 9);
  CHECK(bass_guivarch({2, 1, 2}) == 10);
}

TEST_CASE("Hall basis ordering") {
  const HallBasis b(2, 3);
  REQUIRE(b.size() == 5);
  CHECK(b[0].is_generator());
  CHECK(b[1].is_generator());
  CHECK(b[2].weight == 2);
  CHECK(b[2].left == 1);
  CHECK(b[2].right == 0);
  CHECK(b[3].weight == 3);
  CHECK(b.bracket_index(1, 0) == 2);
  CHECK(b.bracket_index(0, 1) == -1);
}

TEST_CASE("class-2 collection agrees with the Heisenberg matrix model") {
  const FreeNilpotentGroup g(2, 2);
  const std::vector<oracle::Mat3> gens{oracle::mat_x(), oracle::mat_y()};
  const auto images = oracle::basis_images(g.basis(), gens);
  const std::vector<Element> letters{g.generator(0), g.generator(1)};
  std::mt19937_64 rng(11);
  for (int t = 0; t < 300; ++t) {
    const auto w = random_word(rng, 24);
    const Element e = evaluate_word(g, letters, w);
    CHECK(oracle::normal_form(images, e) == oracle::evaluate(gens, w));
    SparseWord sw;
    for (int l : w) sw.push_back({std::abs(l) - 1, l > 0 ? 1 : -1});
    CHECK(g.collector().collect(sw) == e);
  }
}

TEST_CASE("collection is faithful to the Magnus embedding in class 3") {
  const FreeNilpotentGroup g(2, 3);
  const oracle::Magnus magnus(2, 3);
  const std::vector<Element> letters{g.generator(0), g.generator(1)};
  std::map<Element, oracle::Magnus::Poly> seen;
  std::map<oracle::Magnus::Poly, Element> back;
  std::mt19937_64 rng(5);
  for (int t = 0; t < 400; ++t) {
    const auto w = random_word(rng, 14);
    const Element e = evaluate_word(g, letters, w);
    const auto m = magnus.evaluate(w);
    auto [it, fresh] = seen.emplace(e, m);
    CHECK(it->second == m);
    auto [jt, fresh2] = back.emplace(m, e);
    CHECK(jt->second == e);
  }
}

TEST_CASE("multiplication and inverses in higher class") {
  const FreeNilpotentGroup g(3, 3);
  std::mt19937_64 rng(3);
  const std::vector<Element> letters{g.generator(0), g.generator(1), g.generator(2)};
  for (int t = 0; t < 100; ++t) {
    const auto a = evaluate_word(g, letters, oracle::random_word(rng, 3, 10));
    const auto b = evaluate_word(g, letters, oracle::random_word(rng, 3, 10));
    const auto c = evaluate_word(g, letters, oracle::random_word(rng, 3, 10));
    CHECK(g.multiply(g.multiply(a, b), c) == g.multiply(a, g.multiply(b, c)));
    CHECK(g.is_identity(g.multiply(a, g.inverse(a))));
  }
}

TEST_CASE("Lie coordinates: log and exp are inverse and BCH reproduces products") {
  const HallBasis basis(2, 3);
  const LieStructure lie(basis);
  const FreeNilpotentGroup g(2, 3);
  const std::vector<Element> letters{g.generator(0), g.generator(1)};
  std::mt19937_64 rng(9);
  for (int t = 0; t < 40; ++t) {
    const auto a = evaluate_word(g, letters, oracle::random_word(rng, 2, 8));
    const auto b = evaluate_word(g, letters, oracle::random_word(rng, 2, 8));
    const auto la = lie.log(to_rational(a)), lb = lie.log(to_rational(b));
    CHECK(lie.exp(la) == to_rational(a));
    CHECK(lie.exp(lie.bch(la, lb)) == to_rational(g.multiply(a, b)));
    CHECK(lie.multiply(to_rational(a), to_rational(b)) == to_rational(g.multiply(a, b)));
  }
  // [e_x, e_y] = -e_[y,x]
  RatVector x(basis.size(), 0), y(basis.size(), 0);
  x[0] = 1;
  y[1] = 1;
  const auto xy = lie.bracket(x, y);
  CHECK(xy[2] == -1);
  // square root: (x^2)^(1/2) = x
  const RatVector x2 = lie.power(to_rational(g.generator(0)), 2);
  CHECK(lie.power(x2, Rational(1, 2)) == to_rational(g.generator(0)));
}

TEST_CASE("BCH series low-degree coefficients") {
  const auto terms = dynkin_series(3);
  std::map<std::string, Rational> c;
  for (const auto& t : terms) c[t.word] += t.coefficient;
  CHECK(c["X"] == 1);
  CHECK(c["Y"] == 1);
  // log(e^X e^Y) = X + Y + [X,Y]/2 + ..., with [X,Y] reached from the words XY and YX
  CHECK(c["XY"] - c["YX"] == Rational(1, 2));
}

TEST_CASE("free nilpotent balls match direct word enumeration") {
  const FreeNilpotentGroup g(2, 3);
  const std::vector<Element> letters{g.generator(0), g.generator(1)};
  const auto s = standard_generators(g, letters);
  const auto ball = grow_ball(g, {g.identity()}, s.elements, 4);
  std::set<Element> words;
  for (const auto& w : oracle::all_words(2, 4)) words.insert(evaluate_word(g, letters, w));
  std::set<Element> bfs;
  for (std::size_t i = 0; i < ball.elements.size(); ++i) bfs.insert(ball.elements.element(i));
  CHECK(words == bfs);
  CHECK(g.homogeneous_dimension() == 10);
}
