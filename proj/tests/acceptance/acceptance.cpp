// Acceptance checks: one line per criterion, non-zero exit if any fails.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "../oracles.hpp"
#include "growthlab/ball.hpp"
#include "growthlab/catalog.hpp"
#include "growthlab/free_nilpotent.hpp"
#include "growthlab/growth.hpp"
#include "growthlab/progression.hpp"
#include "growthlab/relations.hpp"
#include "growthlab/topology.hpp"
#include "suites.hpp"

using namespace growthlab;

namespace {

// Pinned tolerances.
constexpr double kDegreeLow = 3.5, kDegreeHigh = 4.5;      // criterion 1
constexpr double kHeisenbergSeconds = 60;                  // criterion 1
constexpr Int kSkewBoxConstant = 200;                          // criterion 2
constexpr double kFitBoundaryFactor = 4;                   // criterion 4
constexpr double kFitSeconds = 30;                         // criterion 4
const Rational kRatioLow(1, 8), kRatioHigh(8, 1);         // criterion 5
constexpr int kOracleWords = 1000;                         // criterion 11

struct Outcome {
  bool ok = false;
  std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t).count();
}

std::string fmt(double x, int digits = 3) {
  std::ostringstream s;
  s.precision(digits);
  s << x;
  return s.str();
}

Outcome suites_pass(const std::vector<std::string>& names) {
  Outcome o{true, ""};
  std::size_t total = 0;
  for (const auto& n : names) {
    const auto rep = suites::run_suite(n).front();
    total += rep.checks.size();
    for (const auto& c : rep.checks)
      if (c.status == CheckStatus::Fail) {
        o.ok = false;
        o.detail += " failed " + rep.name + "/" + c.id + " (" + c.detail + ");";
      }
  }
  if (o.ok) o.detail = std::to_string(total) + " checks pass";
  return o;
}

Outcome heisenberg_degree() {
  const auto t = std::chrono::steady_clock::now();
  const auto g = make_group(HeisenbergSpec{});
  const auto p = ball_profile(*g, standard_generators(*g, default_generators(*g)), 32);
  const double secs = seconds_since(t);
  Outcome o{!p.truncated && secs < kHeisenbergSeconds, ""};
  for (int n : {8, 12, 16}) {
    const double d = std::log2(static_cast<double>(p.beta[static_cast<std::size_t>(2 * n)]) /
                               static_cast<double>(p.beta[static_cast<std::size_t>(n)]));
    o.ok = o.ok && d >= kDegreeLow && d <= kDegreeHigh;
    o.detail += "n=" + std::to_string(n) + ": " + fmt(d, 4) + "; ";
  }
  o.detail += "beta(32)=" + std::to_string(p.beta.back()) + ", " + fmt(secs) + " s";
  return o;
}

Outcome skew_box_growth() {
  const auto g = make_group(HeisenbergSpec{});
  Outcome o{true, ""};
  for (Int n : {4, 8, 16}) {
    const Progression p(g, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, {1, 1, n});
    auto s = p.enumerate().elements();  // symmetric and contains the identity
    const Int size = static_cast<Int>(s.size());
    const auto ball = grow_ball(*g, {g->identity()}, s, static_cast<int>(n));
    const Int power = static_cast<Int>(ball.elements.size());
    const Int bound = kSkewBoxConstant * n * n * n * size;
    o.ok = o.ok && !ball.truncated && power <= bound;
    o.detail += "n=" + std::to_string(n) + ": |S^n|/(n^3|S|)=" +
                fmt(static_cast<double>(power) / static_cast<double>(n * n * n * size), 4) + "; ";
  }
  o.detail += "constant " + std::to_string(kSkewBoxConstant);
  return o;
}

Outcome lacunary_generators() {
  const auto z = make_group(AbelianSpec{1, {}});
  const auto p = ball_profile(*z, standard_generators(*z, {{1}, {32}, {1024}}), 15);
  Outcome o{true, ""};
  for (Int n : {8, 15}) {
    const Int b = p.beta[static_cast<std::size_t>(n)];
    o.ok = o.ok && b >= n * n * n;
    o.detail += "|S^" + std::to_string(n) + "|=" + std::to_string(b) + " vs n^3=" + std::to_string(n * n * n) + "; ";
  }
  return o;
}

Outcome product_fit() {
  const auto t = std::chrono::steady_clock::now();
  const auto e = catalog_entry("prod:4,16,64");
  const auto g = make_group(e.spec);
  const auto p = ball_profile(*g, catalog_generators(e, *g), 96);
  const auto fit = fit_growth(p, 1);
  const double secs = seconds_since(t);
  const std::vector<double> target{4, 16, 64};
  Outcome o{fit.f.degrees == std::vector<int>{3, 2, 1, 0} && fit.f.decreases() == 3 && secs < kFitSeconds, ""};
  o.detail = "degrees ";
  for (int d : fit.f.degrees) o.detail += std::to_string(d) + " ";
  o.detail += "boundaries";
  for (std::size_t i = 1; i < fit.f.boundaries.size(); ++i) {
    const double b = fit.f.boundaries[i].to_double();
    if (i - 1 < target.size()) {
      const double ratio = b / target[i - 1];
      o.ok = o.ok && ratio <= kFitBoundaryFactor && ratio >= 1 / kFitBoundaryFactor;
    }
    o.detail += " " + fmt(b);
  }
  o.detail += "; " + fmt(secs) + " s";
  return o;
}

Outcome polynomial_vs_powers() {
  const auto g = make_group(HeisenbergSpec{});
  const Progression p(g, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, {1, 1, 1});
  const auto f = growth_polynomial({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, {1, 1, 2}, {1, 1, 1});
  const auto ball = progression_powers(p, 16);
  const auto beta = ball.profile("").beta;
  Outcome o{!ball.truncated, ""};
  Rational lo = 1000, hi = 0;
  for (int n = 4; n <= 16; ++n) {
    const Rational ratio = Rational(beta[static_cast<std::size_t>(n)]) / evaluate(f, Rational(n));
    lo = std::min(lo, ratio);
    hi = std::max(hi, ratio);
  }
  o.ok = o.ok && lo >= kRatioLow && hi <= kRatioHigh;
  o.detail = "|P^n|/f(n) in [" + fmt(lo.get_d(), 4) + ", " + fmt(hi.get_d(), 4) + "] for n=4..16, allowed [1/8, 8]";
  return o;
}

Outcome injectivity() {
  const auto z = make_group(AbelianSpec{1, {}});
  int matched = 0, total = 0;
  for (Int m : {7, 10, 12, 16, 25})
    for (Int l : {1, 2, 3, 5}) {
      const auto zm = make_group(AbelianSpec{1, {{BigInt(static_cast<long>(m))}}});
      const Progression p(zm, {{1}}, {l}, Projection{z, {}, {}});
      const Radius inj = injectivity_radius(p, 128);
      ++total;
      matched += inj && *inj == (m + l - 1) / l - 1;
    }
  auto o = suites_pass({"proper-center"});
  o.ok = o.ok && matched == total && total == 20;
  o.detail = std::to_string(matched) + "/" + std::to_string(total) + " closed-form radii; proper-center: " + o.detail;
  return o;
}

Outcome simple_connectedness() {
  Outcome o{true, ""};
  int cases = 0;
  for (std::size_t n : {5, 8, 12})
    for (int k = 3; k <= static_cast<int>(n) + 1; ++k) {
      const std::size_t expected = k < static_cast<int>(n) ? 1 : 0;
      o.ok = o.ok && pk_h1_rank(cycle_graph(n), k) == expected;
      ++cases;
    }
  const auto grid = pk_h1_rank(grid_graph(3, 3), 4);
  o.ok = o.ok && grid == 0;
  o.detail = std::to_string(cases) + " cycle cases; grid 3x3 rank " + std::to_string(grid) + " at k=4";
  return o;
}

Outcome relation_scales() {
  auto scales = [](const std::string& name, int n_max) {
    const auto e = catalog_entry(name);
    const auto g = make_group(e.spec);
    return new_relation_scales_abelian(dynamic_cast<const AbelianGroup&>(*g), e.generators, n_max).scales;
  };
  auto text = [](const std::vector<int>& v) {
    std::string s = "{";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + "}";
  };
  const auto a = scales("zmod:100", 8), b = scales("prod:4,64", 7), c = scales("prod:4,16", 6),
             d = scales("prod:4,16,64", 7);
  Outcome o{a == std::vector<int>{7} && b == std::vector<int>{2, 6} && c.size() == 2 && d.size() == 3, ""};
  o.detail = "Z100 " + text(a) + ", Z4xZ64 " + text(b) + ", Z4xZ16 " + text(c) + ", Z4xZ16xZ64 " + text(d);
  return o;
}

Outcome oracle_equivalence() {
  Outcome o{true, ""};
  // class 2: collection and multiplication against 3x3 unitriangular matrices
  const FreeNilpotentGroup g2(2, 2);
  const std::vector<oracle::Mat3> gens{oracle::mat_x(), oracle::mat_y()};
  const auto images = oracle::basis_images(g2.basis(), gens);
  const std::vector<Element> letters2{g2.generator(0), g2.generator(1)};
  std::mt19937_64 rng(2024);
  int agree = 0;
  for (int t = 0; t < kOracleWords; ++t) {
    const auto w = oracle::random_word(rng, 2, 30);
    const auto v = oracle::random_word(rng, 2, 30);
    SparseWord sw;
    for (int l : w) sw.push_back({std::abs(l) - 1, l > 0 ? 1 : -1});
    const auto a = g2.collector().collect(sw);
    const auto b = evaluate_word(g2, letters2, v);
    const auto ab = g2.collector().multiply(a, b);
    const bool ok = oracle::normal_form(images, a) == oracle::evaluate(gens, w) &&
                    oracle::normal_form(images, ab) == oracle::evaluate(gens, w) * oracle::evaluate(gens, v);
    agree += ok;
  }
  o.ok = agree == kOracleWords;
  o.detail = std::to_string(agree) + "/" + std::to_string(kOracleWords) + " words agree with matrices; ";

  // class 3: breadth-first balls against words evaluated in the group and in the Magnus embedding
  const FreeNilpotentGroup g3(2, 3);
  const oracle::Magnus magnus(2, 3);
  const std::vector<Element> letters3{g3.generator(0), g3.generator(1)};
  const auto words = oracle::all_words(2, 4);
  const auto ball = grow_ball(g3, {g3.identity()}, standard_generators(g3, letters3).elements, 4);
  for (int r = 0; r <= 4; ++r) {
    std::set<Element> by_words;
    std::set<oracle::Magnus::Poly> by_magnus;
    for (const auto& w : words)
      if (static_cast<int>(w.size()) <= r) {
        by_words.insert(evaluate_word(g3, letters3, w));
        by_magnus.insert(magnus.evaluate(w));
      }
    std::set<Element> by_bfs;
    for (std::size_t i = 0; i < ball.layer_end[static_cast<std::size_t>(r)]; ++i) by_bfs.insert(ball.elements.element(i));
    const bool same = by_words == by_bfs && by_magnus.size() == by_bfs.size();
    o.ok = o.ok && same;
    o.detail += "r=" + std::to_string(r) + ":" + std::to_string(by_bfs.size()) + (same ? "" : "(mismatch)") + " ";
  }
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    std::string name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {"heisenberg-growth-degree", heisenberg_degree},
      {"heisenberg-skew-box-growth", skew_box_growth},
      {"lacunary-generators-of-z", lacunary_generators},
      {"product-of-cyclic-fit", product_fit},
      {"growth-polynomial-vs-powers", polynomial_vs_powers},
      {"exact-lemma-suites", [] { return suites_pass({"sphere-bounds", "lemmas", "identities", "local-hom"}); }},
      {"injectivity-radii", injectivity},
      {"k-simple-connectedness", simple_connectedness},
      {"relation-scales", relation_scales},
      {"witness-verifier", [] { return suites_pass({"witness"}); }},
      {"oracle-equivalence", oracle_equivalence},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    const auto t = std::chrono::steady_clock::now();
    try {
      o = criteria[i].run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.ok;
    std::printf("[%s] %2zu %-30s %s (%.2f s)\n", o.ok ? "PASS" : "FAIL", i + 1, criteria[i].name.c_str(),
                o.detail.c_str(), seconds_since(t));
    std::fflush(stdout);
  }
  std::printf("%zu/%zu criteria pass\n", criteria.size() - static_cast<std::size_t>(failed), criteria.size());
  return failed == 0 ? 0 : 1;
}
