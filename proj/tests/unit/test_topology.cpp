#include <doctest.h>

#include "growthlab/topology.hpp"

using namespace growthlab;

TEST_CASE("graph construction") {
  FiniteGraph g(4);
  g.add_edge(0, 1);
  g.add_edge(1, 0);
  g.add_edge(2, 2);
  CHECK(g.edges().size() == 1);
  CHECK(g.adjacent(1, 0));
  CHECK_FALSE(g.adjacent(0, 2));
  CHECK(g.components() == 3);
  CHECK(g.distances(0)[1] == 1);
  CHECK(g.distances(0)[3] == -1);
  const auto grid = grid_graph(3, 3);
  CHECK(grid.edges().size() == 12);
  CHECK(grid.distances(0)[8] == 4);
  CHECK(complete_graph(5).edges().size() == 10);
}

TEST_CASE("simple cycles are listed once") {
  CHECK(simple_cycles(complete_graph(4), 4).size() == 7);  // 4 triangles and 3 squares
  CHECK(simple_cycles(cycle_graph(6), 5).empty());
  CHECK(simple_cycles(grid_graph(3, 3), 4).size() == 4);
  CHECK_THROWS_AS(simple_cycles(complete_graph(8), 8, 100), ResourceError);
}

TEST_CASE("filled first homology") {
  CHECK(pk_h1_rank(cycle_graph(8), 7) == 1);
  CHECK(pk_h1_rank(cycle_graph(8), 8) == 0);
  CHECK(pk_h1_rank(complete_graph(4), 3) == 0);
  const auto grid = pk_h1(grid_graph(3, 3), 4);
  CHECK(grid.rank == 0);
  CHECK(grid.cycle_rank == 4);
  CHECK(grid.torsion_computed);
  CHECK(grid.torsion.empty());
  CHECK(pk_h1_rank(grid_graph(3, 3), 3) == 4);
  // the Cayley graph of Z/6 is a hexagon
  const auto z6 = make_group(AbelianSpec{1, {{6}}});
  const auto c = cayley_graph(*z6, standard_generators(*z6, {{1}}));
  CHECK(c.graph.size() == 6);
  CHECK(pk_h1_rank(c.graph, 5) == 1);
  CHECK(pk_h1_rank(c.graph, 6) == 0);
}

TEST_CASE("C-path equivalence") {
  const auto grid = grid_graph(3, 3);
  CHECK(is_cpath(grid, {0, 1, 2}, 1));
  CHECK_FALSE(is_cpath(grid, {0, 2}, 1));
  CHECK(is_cpath(grid, {0, 2}, 2));

  const auto same = cpath_equivalent(grid, {0, 1, 4}, {0, 1, 4}, 1, 4);
  CHECK(same.verdict == PathVerdict::Equivalent);
  CHECK(same.chain.size() == 1);

  // two sides of the unit square: one move
  const auto sq = cpath_equivalent(grid, {0, 1, 4}, {0, 3, 4}, 1, 4);
  CHECK(sq.verdict == PathVerdict::Equivalent);
  REQUIRE(sq.chain.size() == 2);
  CHECK(is_elementary_move(grid, sq.chain[0], sq.chain[1], 1, 4));

  // opposite arcs of a 12-cycle
  const auto c12 = cycle_graph(12);
  const auto arcs = cpath_equivalent(c12, {0, 1, 2, 3, 4, 5, 6}, {0, 11, 10, 9, 8, 7, 6}, 1, 4);
  CHECK(arcs.verdict == PathVerdict::NotEquivalentByH1);

  // a longer chain across the grid
  const auto far = cpath_equivalent(grid, {0, 1, 2, 5, 8}, {0, 3, 6, 7, 8}, 1, 4);
  CHECK(far.verdict == PathVerdict::Equivalent);
  for (std::size_t i = 0; i + 1 < far.chain.size(); ++i) CHECK(is_elementary_move(grid, far.chain[i], far.chain[i + 1], 1, 4));

  CHECK_THROWS_AS(cpath_equivalent(grid, {0, 1}, {0, 3}, 1, 4), PreconditionError);
  CHECK_THROWS_AS(cpath_equivalent(grid, {0, 2}, {0, 1, 2}, 1, 4), PreconditionError);
}

TEST_CASE("local homomorphisms") {
  const auto z = make_group(AbelianSpec{1, {}});
  const auto z7 = make_group(AbelianSpec{1, {{7}}});
  // psi: Z/7 -> {-3..3}
  LocalMap psi{z7, z, {}};
  std::vector<Element> all;
  for (Int k = 0; k < 7; ++k) {
    psi.table[{k}] = {k <= 3 ? k : k - 7};
    all.push_back({k});
  }
  const auto r = local_hom_check(psi, all);
  CHECK_FALSE(r.holds);
  CHECK(std::find(r.failures.begin(), r.failures.end(), std::pair<Element, Element>{{3}, {1}}) != r.failures.end());
  // on {-1, 0, 1} it is a local homomorphism
  const auto small = local_hom_check(psi, {{6}, {0}, {1}});
  CHECK(small.holds);
  CHECK(small.domain_ok);

  // restriction of Z -> Z/7 to {-3..3}
  LocalMap phi{z, z7, {}};
  std::vector<Element> a, half;
  for (Int k = -6; k <= 6; ++k) phi.table[{k}] = z7->canonical({k});
  for (Int k = -3; k <= 3; ++k) a.push_back({k});
  const auto rep = local_hom_check(phi, a);
  CHECK(rep.holds);
  CHECK(rep.domain_ok);
  // pullbacks need an injective table
  LocalMap inj{z, z7, {}};
  for (Int k = -3; k <= 3; ++k) inj.table[{k}] = z7->canonical({k});
  const auto pb = pullback_subgroup(inj, a, {{0}});
  CHECK(pb.certified);
  CHECK(pb.elements == std::vector<Element>{{0}});
  CHECK_THROWS_AS(pullback_subgroup(inj, a, {{0}, {1}}), PreconditionError);  // not closed
  // the table identifies 0 and 7
  LocalMap wide{z, z7, {}};
  for (Int k = -7; k <= 7; ++k) wide.table[{k}] = z7->canonical({k});
  CHECK_THROWS_AS(pullback_subgroup(wide, a, {{0}}), PreconditionError);
}

TEST_CASE("truncated presentation balls") {
  const auto z100 = make_group(AbelianSpec{1, {{100}}});
  const auto s = standard_generators(*z100, {{1}});
  const auto t = truncated_presentation_ball(*z100, s, 8, 4);
  CHECK(t.profile.beta == std::vector<Int>{1, 3, 5, 7, 9});
  CHECK_FALSE(t.note.empty());
  CHECK_THROWS_AS(truncated_presentation_ball(*z100, s, 8, 5), PreconditionError);
  const auto h = make_group(HeisenbergSpec{});
  const auto hs = standard_generators(*h, default_generators(*h));
  CHECK(truncated_presentation_ball(*h, hs, 12, 6).profile.beta == ball_profile(*h, hs, 6).beta);
}
