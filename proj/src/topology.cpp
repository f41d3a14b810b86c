#include "growthlab/topology.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>

#include "growthlab/linalg.hpp"

namespace growthlab {

void FiniteGraph::add_edge(std::size_t u, std::size_t v) {
  if (u >= size() || v >= size()) throw PreconditionError("edge endpoint out of range");
  if (u == v || adjacent(u, v)) return;
  adj_[u].push_back(v);
  adj_[v].push_back(u);
  auto key = std::minmax(u, v);
  auto pos = std::lower_bound(edges_.begin(), edges_.end(), std::pair(key.first, key.second));
  edges_.insert(pos, {key.first, key.second});
  index_.clear();
  for (std::size_t i = 0; i < edges_.size(); ++i) index_[edges_[i]] = i;
  components_.reset();
}

bool FiniteGraph::adjacent(std::size_t u, std::size_t v) const {
  const auto& a = adj_[u];
  return std::find(a.begin(), a.end(), v) != a.end();
}

std::optional<std::size_t> FiniteGraph::edge_index(std::size_t u, std::size_t v) const {
  auto it = index_.find(std::minmax(u, v));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t FiniteGraph::components() const {
  if (components_) return *components_;
  std::vector<bool> seen(size(), false);
  std::size_t count = 0;
  for (std::size_t s = 0; s < size(); ++s) {
    if (seen[s]) continue;
    ++count;
    std::vector<std::size_t> stack{s};
    seen[s] = true;
    while (!stack.empty()) {
      std::size_t v = stack.back();
      stack.pop_back();
      for (std::size_t w : adj_[v])
        if (!seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
    }
  }
  components_ = count;
  return count;
}

std::vector<int> FiniteGraph::distances(std::size_t v) const {
  std::vector<int> d(size(), -1);
  std::deque<std::size_t> queue{v};
  d[v] = 0;
  while (!queue.empty()) {
    std::size_t x = queue.front();
    queue.pop_front();
    for (std::size_t y : adj_[x])
      if (d[y] < 0) {
        d[y] = d[x] + 1;
        queue.push_back(y);
      }
  }
  return d;
}

FiniteGraph cycle_graph(std::size_t n) {
  if (n < 3) throw PreconditionError("a cycle needs at least 3 vertices");
  FiniteGraph g(n);
  for (std::size_t i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

FiniteGraph complete_graph(std::size_t n) {
  FiniteGraph g(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

FiniteGraph grid_graph(std::size_t rows, std::size_t cols) {
  FiniteGraph g(rows * cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) {
      if (c + 1 < cols) g.add_edge(r * cols + c, r * cols + c + 1);
      if (r + 1 < rows) g.add_edge(r * cols + c, (r + 1) * cols + c);
    }
  return g;
}

CayleyGraph cayley_graph(const Group& g, const GeneratingSet& s, std::size_t cap) {
  BallOptions opts;
  opts.cap = cap;
  opts.stop_at_saturation = true;
  auto gens = s.symmetrized(g).elements;
  Ball ball = grow_ball(g, {g.identity()}, gens, static_cast<int>(cap), opts);
  if (ball.truncated) throw ResourceError("Cayley graph exceeds the vertex cap");
  CayleyGraph out{FiniteGraph(ball.elements.size()), std::move(ball.elements)};
  Element prod(g.width());
  for (std::size_t i = 0; i < out.elements.size(); ++i)
    for (const auto& x : gens) {
      g.multiply(out.elements.at(i), x.data(), prod.data());
      auto j = out.elements.find(prod.data());
      if (!j) throw PreconditionError("generating set does not close up on a finite group");
      out.graph.add_edge(i, *j);
    }
  return out;
}

std::vector<std::vector<std::size_t>> simple_cycles(const FiniteGraph& g, int k, std::size_t cap) {
  std::vector<std::vector<std::size_t>> out;
  if (k < 3) return out;
  std::vector<std::size_t> path;
  std::vector<bool> on_path(g.size(), false);
  std::function<void(std::size_t)> extend = [&](std::size_t start) {
    std::size_t last = path.back();
    for (std::size_t w : g.neighbors(last)) {
      if (w == start && path.size() >= 3 && path[1] < last) {
        out.push_back(path);
        if (out.size() > cap) throw ResourceError("simple cycle enumeration exceeds the cap");
      }
      if (w <= start || on_path[w] || static_cast<int>(path.size()) >= k) continue;
      on_path[w] = true;
      path.push_back(w);
      extend(start);
      path.pop_back();
      on_path[w] = false;
    }
  };
  for (std::size_t s = 0; s < g.size(); ++s) {
    path.assign(1, s);
    on_path[s] = true;
    extend(s);
    on_path[s] = false;
  }
  return out;
}

namespace {

using Chain = SparseRowSpace::Row;

// Signed edge vector of the closed walk v_0 .. v_{n-1} v_0.
Chain cycle_chain(const FiniteGraph& g, const std::vector<std::size_t>& cyc) {
  Chain row;
  for (std::size_t i = 0; i < cyc.size(); ++i) {
    std::size_t a = cyc[i], b = cyc[(i + 1) % cyc.size()];
    std::size_t e = *g.edge_index(a, b);
    row[e] += a < b ? 1 : -1;
  }
  return row;
}

constexpr std::size_t kTorsionLimit = 160;

}  // namespace

FilledHomology pk_h1(const FiniteGraph& g, int k, std::size_t cap) {
  if (!g.connected()) throw PreconditionError("graph is not connected");
  FilledHomology out;
  out.k = k;
  out.cycle_rank = g.edges().size() + g.components() - g.size();
  auto cells = simple_cycles(g, k, cap);
  out.cells = cells.size();
  SparseRowSpace span;
  for (const auto& c : cells) {
    span.add(cycle_chain(g, c));
    if (span.rank() == out.cycle_rank) break;
  }
  out.boundary_rank = span.rank();
  out.rank = out.cycle_rank - out.boundary_rank;
  if (cells.size() <= kTorsionLimit && g.edges().size() <= kTorsionLimit) {
    IntMatrix m(cells.size(), IntVector(g.edges().size(), 0));
    for (std::size_t i = 0; i < cells.size(); ++i)
      for (const auto& [e, v] : cycle_chain(g, cells[i])) m[i][e] = v.get_num();
    for (const auto& f : smith_invariants(m))
      if (f > 1) out.torsion.push_back(f);
    out.torsion_computed = true;
  }
  return out;
}

std::size_t pk_h1_rank(const FiniteGraph& g, int k, std::size_t cap) { return pk_h1(g, k, cap).rank; }

std::string to_string(PathVerdict v) {
  switch (v) {
    case PathVerdict::Equivalent: return "equivalent";
    case PathVerdict::NotEquivalentByH1: return "not-equivalent-by-H1";
    case PathVerdict::Unknown: return "unknown";
  }
  return "unknown";
}

namespace {

// Distances and C-balls computed on demand.
class Metric {
 public:
  Metric(const FiniteGraph& g, int c) : g_(g), c_(c), dist_(g.size()), ball_(g.size()) {}

  int distance(std::size_t u, std::size_t v) {
    if (dist_[u].empty()) dist_[u] = g_.distances(u);
    return dist_[u][v];
  }

  const std::vector<std::size_t>& ball(std::size_t u) {
    if (ball_[u].empty()) {
      for (std::size_t v = 0; v < g_.size(); ++v) {
        int d = distance(u, v);
        if (d > 0 && d <= c_) ball_[u].push_back(v);
      }
      if (ball_[u].empty()) ball_[u].push_back(u);  // isolated vertex: only stutters
    }
    return ball_[u];
  }

  // Edge vector of a deterministic geodesic from u to v.
  void geodesic(std::size_t u, std::size_t v, int sign, Chain& acc) {
    std::size_t x = u;
    while (x != v) {
      std::size_t next = x;
      for (std::size_t y : g_.neighbors(x))
        if (distance(y, v) == distance(x, v) - 1 && (next == x || y < next)) next = y;
      if (next == x) throw PreconditionError("path leaves the connected component");
      acc[*g_.edge_index(x, next)] += x < next ? sign : -sign;
      x = next;
    }
  }

 private:
  const FiniteGraph& g_;
  int c_;
  std::vector<std::vector<int>> dist_;
  std::vector<std::vector<std::size_t>> ball_;
};

bool step_ok(Metric& m, const CPath& p, int c) {
  for (std::size_t i = 0; i + 1 < p.size(); ++i) {
    int d = m.distance(p[i], p[i + 1]);
    if (d < 0 || d > c) return false;
  }
  return true;
}

// Appends every C-path from a to b with exactly t steps and no repeated consecutive vertex.
void replacements(Metric& m, std::size_t a, std::size_t b, int t, int c, std::vector<std::vector<std::size_t>>& out) {
  if (t == 0) {
    if (a == b) out.push_back({});
    return;
  }
  std::vector<std::size_t> mid;
  std::function<void(std::size_t, int)> go = [&](std::size_t x, int left) {
    if (left == 1) {
      int d = m.distance(x, b);
      if (d > 0 && d <= c) out.push_back(mid);
      return;
    }
    for (std::size_t y : m.ball(x)) {
      int d = m.distance(y, b);
      if (y == x || d < 0 || d > c * (left - 1)) continue;
      mid.push_back(y);
      go(y, left - 1);
      mid.pop_back();
    }
  };
  go(a, t);
}

}  // namespace

bool is_cpath(const FiniteGraph& g, const CPath& p, int c) {
  if (p.empty()) return false;
  for (std::size_t v : p)
    if (v >= g.size()) return false;
  Metric m(g, c);
  return step_ok(m, p, c);
}

bool is_elementary_move(const FiniteGraph& g, const CPath& p, const CPath& q, int c, int l) {
  if (!is_cpath(g, p, c) || !is_cpath(g, q, c)) return false;
  if (p.front() != q.front() || p.back() != q.back()) return false;
  // common prefix v_0..v_{j1} and common suffix, disjoint in both paths
  const std::size_t np = p.size() - 1, nq = q.size() - 1;
  for (std::size_t j1 = 0; j1 <= std::min(np, nq); ++j1) {
    if (p[j1] != q[j1]) break;
    for (std::size_t j3 = 0; j1 + j3 <= std::min(np, nq); ++j3) {
      if (p[np - j3] != q[nq - j3]) break;
      std::size_t j2 = np - j1 - j3, j2b = nq - j1 - j3;
      if (static_cast<long>(j2 + j2b) <= l) return true;
    }
  }
  return false;
}

PathEquivalence cpath_equivalent(const FiniteGraph& g, const CPath& p, const CPath& q, int c, int l,
                                 std::size_t budget) {
  if (!is_cpath(g, p, c) || !is_cpath(g, q, c)) throw PreconditionError("argument is not a C-path");
  if (p.front() != q.front() || p.back() != q.back()) throw PreconditionError("paths have different endpoints");
  PathEquivalence out;
  if (p == q) {
    out.verdict = PathVerdict::Equivalent;
    out.chain = {p};
    return out;
  }
  Metric metric(g, c);

  // Homology obstruction: every move changes the filled loop by a closed walk of length <= C L.
  try {
    Chain loop;
    for (std::size_t i = 0; i + 1 < p.size(); ++i) metric.geodesic(p[i], p[i + 1], 1, loop);
    for (std::size_t i = 0; i + 1 < q.size(); ++i) metric.geodesic(q[i], q[i + 1], -1, loop);
    SparseRowSpace span;
    for (const auto& cyc : simple_cycles(g, c * l)) span.add(cycle_chain(g, cyc));
    if (!span.contains(loop)) {
      out.verdict = PathVerdict::NotEquivalentByH1;
      return out;
    }
  } catch (const ResourceError&) {
  }

  const std::size_t max_steps = std::max(p.size(), q.size()) - 1 + static_cast<std::size_t>(std::max(l / 2, 1));
  std::map<CPath, CPath> parent[2];
  std::vector<CPath> frontier[2] = {{p}, {q}};
  parent[0][p] = {};
  parent[1][q] = {};
  std::optional<CPath> meet;

  auto neighbors = [&](const CPath& x, const std::function<bool(CPath)>& visit) {
    const std::size_t n = x.size() - 1;
    std::vector<std::vector<std::size_t>> mids;
    for (std::size_t j1 = 0; j1 <= n; ++j1)
      for (std::size_t j2 = 0; j2 <= n - j1 && static_cast<int>(j2) <= l; ++j2)
        for (int j2b = 0; j2b + static_cast<int>(j2) <= l; ++j2b) {
          if (n - j2 + static_cast<std::size_t>(j2b) > max_steps) break;
          if (j2 == 0 && j2b == 0) continue;
          mids.clear();
          replacements(metric, x[j1], x[j1 + j2], j2b, c, mids);
          for (const auto& mid : mids) {
            CPath y(x.begin(), x.begin() + static_cast<long>(j1) + 1);
            y.insert(y.end(), mid.begin(), mid.end());
            if (j2b > 0) y.push_back(x[j1 + j2]);
            y.insert(y.end(), x.begin() + static_cast<long>(j1 + j2) + 1, x.end());
            if (y.size() == 1 && x.front() != x.back()) continue;
            if (y != x && !visit(std::move(y))) return false;
          }
        }
    return true;
  };

  while (!meet && !frontier[0].empty() && !frontier[1].empty()) {
    int side = frontier[0].size() <= frontier[1].size() ? 0 : 1;
    std::vector<CPath> next;
    bool exhausted = false;
    for (const auto& x : frontier[side]) {
      bool go_on = neighbors(x, [&](CPath y) {
        if (parent[side].count(y)) return true;
        parent[side][y] = x;
        ++out.explored;
        if (parent[1 - side].count(y)) {
          meet = y;
          return false;
        }
        if (out.explored >= budget) {
          exhausted = true;
          return false;
        }
        next.push_back(std::move(y));
        return true;
      });
      if (!go_on) break;
    }
    if (exhausted && !meet) return out;
    frontier[side] = std::move(next);
  }
  if (!meet) return out;

  std::vector<CPath> head;
  for (CPath x = *meet; !x.empty(); x = parent[0][x]) head.push_back(x);
  std::reverse(head.begin(), head.end());
  for (CPath x = parent[1][*meet]; !x.empty(); x = parent[1][x]) head.push_back(x);
  out.verdict = PathVerdict::Equivalent;
  out.chain = std::move(head);
  return out;
}

LocalHomReport local_hom_check(const LocalMap& phi, const std::vector<Element>& a) {
  const Group& src = *phi.source;
  const Group& dst = *phi.target;
  LocalHomReport out;
  out.domain_ok = true;
  for (const auto& x : a) {
    auto fx = phi.table.find(src.canonical(x));
    if (fx == phi.table.end()) {
      out.domain_ok = false;
      continue;
    }
    for (const auto& y : a) {
      auto fy = phi.table.find(src.canonical(y));
      auto fxy = phi.table.find(src.multiply(x, y));
      if (fy == phi.table.end() || fxy == phi.table.end()) {
        out.domain_ok = false;
        continue;
      }
      if (dst.canonical(fxy->second) != dst.multiply(fx->second, fy->second))
        out.failures.emplace_back(src.canonical(x), src.canonical(y));
    }
  }
  out.holds = out.domain_ok && out.failures.empty();
  return out;
}

Pullback pullback_subgroup(const LocalMap& phi, const std::vector<Element>& a, const std::vector<Element>& k) {
  const Group& src = *phi.source;
  const Group& dst = *phi.target;
  std::map<Element, Element> inverse;
  for (const auto& [x, fx] : phi.table)
    if (!inverse.emplace(dst.canonical(fx), x).second)
      throw PreconditionError("map is not injective on its table");
  std::set<Element> image_of_a;
  for (const auto& x : a) {
    auto it = phi.table.find(src.canonical(x));
    if (it == phi.table.end()) throw PreconditionError("A is not contained in the table");
    image_of_a.insert(dst.canonical(it->second));
  }
  Pullback out;
  std::set<Element> kset;
  for (const auto& y : k) {
    Element cy = dst.canonical(y);
    if (!image_of_a.count(cy)) throw PreconditionError("K is not contained in phi(A)");
    if (!kset.insert(cy).second) continue;
    out.elements.push_back(inverse.at(cy));
    out.isomorphism[cy] = inverse.at(cy);
  }
  out.certified = true;
  for (const auto& y1 : kset)
    for (const auto& y2 : kset) {
      Element y = dst.multiply(y1, y2);
      if (!kset.count(y)) throw PreconditionError("K is not closed under multiplication");
      if (src.multiply(out.isomorphism[y1], out.isomorphism[y2]) != src.canonical(out.isomorphism[y]))
        out.certified = false;
    }
  return out;
}

TruncatedBall truncated_presentation_ball(const Group& g, const GeneratingSet& s, int r, int radius,
                                          const BallOptions& options) {
  if (radius < 0 || r < 0) throw PreconditionError("radii must be non-negative");
  if (radius > r / 2) throw PreconditionError("unsupported: radius exceeds half the relation length");
  TruncatedBall out;
  out.profile = ball_profile(g, s, radius, options);
  out.note = "ball of the truncated presentation equals the ball of the group within half the relation length";
  return out;
}

}  // namespace growthlab
