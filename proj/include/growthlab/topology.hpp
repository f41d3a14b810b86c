// Coarse topology of finite graphs: filled cycle complexes, C-path homotopy, local homomorphisms.
#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "growthlab/ball.hpp"
#include "growthlab/group.hpp"
#include "growthlab/subgroup.hpp"

namespace growthlab {

/// Simple undirected graph on {0, .., n-1}.
class FiniteGraph {
 public:
  explicit FiniteGraph(std::size_t n = 0) : adj_(n) {}

  std::size_t size() const { return adj_.size(); }
  /// Adds {u, v}; loops and repeated edges are ignored.
  void add_edge(std::size_t u, std::size_t v);
  bool adjacent(std::size_t u, std::size_t v) const;
  const std::vector<std::size_t>& neighbors(std::size_t v) const { return adj_[v]; }
  /// Edges (u, v) with u < v, sorted; the index in this list orients and names the edge.
  const std::vector<std::pair<std::size_t, std::size_t>>& edges() const { return edges_; }
  std::optional<std::size_t> edge_index(std::size_t u, std::size_t v) const;
  std::size_t components() const;
  bool connected() const { return components() <= 1; }
  /// Breadth-first distances from v (-1 when unreachable).
  std::vector<int> distances(std::size_t v) const;

 private:
  std::vector<std::vector<std::size_t>> adj_;
  std::vector<std::pair<std::size_t, std::size_t>> edges_;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> index_;
  mutable std::optional<std::size_t> components_;
};

FiniteGraph cycle_graph(std::size_t n);
FiniteGraph complete_graph(std::size_t n);
FiniteGraph grid_graph(std::size_t rows, std::size_t cols);  // vertex r * cols + c

/// Cayley graph of a finite group; vertex i is the i-th element of the returned set.
struct CayleyGraph {
  FiniteGraph graph;
  ElementSet elements;
};

CayleyGraph cayley_graph(const Group& g, const GeneratingSet& s, std::size_t cap = 200'000);

/// Simple cycles of length 3..k, each listed once starting at its smallest vertex.
std::vector<std::vector<std::size_t>> simple_cycles(const FiniteGraph& g, int k, std::size_t cap = 1'000'000);

struct FilledHomology {
  int k = 0;
  std::size_t cycle_rank = 0;     // |E| - |V| + components
  std::size_t boundary_rank = 0;  // rank of the 2-cell boundaries
  std::size_t rank = 0;           // free rank of H1
  std::vector<BigInt> torsion;    // invariant factors > 1, when computed
  bool torsion_computed = false;
  std::size_t cells = 0;
};

/// First homology of the graph with every simple cycle of length <= k filled by a 2-cell.
FilledHomology pk_h1(const FiniteGraph& g, int k, std::size_t cap = 1'000'000);
std::size_t pk_h1_rank(const FiniteGraph& g, int k, std::size_t cap = 1'000'000);

/// Vertex sequence with consecutive distances at most C.
using CPath = std::vector<std::size_t>;

bool is_cpath(const FiniteGraph& g, const CPath& p, int c);

/// True when q arises from p by replacing one subpath of j steps by one of j' steps, j + j' <= L.
bool is_elementary_move(const FiniteGraph& g, const CPath& p, const CPath& q, int c, int l);

enum class PathVerdict { Equivalent, NotEquivalentByH1, Unknown };

std::string to_string(PathVerdict v);

struct PathEquivalence {
  PathVerdict verdict = PathVerdict::Unknown;
  std::vector<CPath> chain;  // p, ..., q with consecutive entries one elementary move apart
  std::size_t explored = 0;
};

/// Bounded bidirectional search for a chain of elementary moves, after an exact homology test.
PathEquivalence cpath_equivalent(const FiniteGraph& g, const CPath& p, const CPath& q, int c, int l,
                                 std::size_t budget = 200'000);

/// Map between finite subsets of two groups, given by an explicit table.
struct LocalMap {
  GroupPtr source;
  GroupPtr target;
  std::map<Element, Element> table;
};

struct LocalHomReport {
  bool holds = false;
  bool domain_ok = false;  // every product ab with a, b in A lies in the table
  std::vector<std::pair<Element, Element>> failures;  // pairs (a, b) with phi(ab) != phi(a) phi(b)
};

/// Exhaustive check of phi(ab) = phi(a) phi(b) for a, b in A.
LocalHomReport local_hom_check(const LocalMap& phi, const std::vector<Element>& a);

struct Pullback {
  std::vector<Element> elements;            // phi^{-1}(K), listed along K
  std::map<Element, Element> isomorphism;   // k -> a with phi(a) = k
  bool certified = false;                   // the inverse map is an injective homomorphism on K
};

/// phi^{-1}(K) for a finite subgroup K of phi(A); throws PreconditionError when K is not contained in phi(A)
/// or when phi is not injective on the table.
Pullback pullback_subgroup(const LocalMap& phi, const std::vector<Element>& a, const std::vector<Element>& k);

struct TruncatedBall {
  BallProfile profile;
  std::string note;
};

/// Ball of <S | relations of length <= r> up to radius R <= floor(r/2), which coincides with the ball of G.
TruncatedBall truncated_presentation_ball(const Group& g, const GeneratingSet& s, int r, int radius,
                                          const BallOptions& options = {});

}  // namespace growthlab
