#include "growthlab/growth.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace growthlab {

namespace {

/// Calls visit(indices) for every k-subset of {0..n-1} in lexicographic order.
template <class Visit>
void for_each_subset(std::size_t n, std::size_t k, Visit&& visit) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    visit(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

std::size_t dimension_of(const RatMatrix& vectors) {
  if (vectors.empty()) throw PreconditionError("at least one vector is required");
  const std::size_t d = vectors[0].size();
  for (const auto& v : vectors)
    if (v.size() != d) throw PreconditionError("vectors must share one dimension");
  return d;
}

Rational subset_volume(const RatMatrix& vectors, const std::vector<Rational>& lengths,
                       const std::vector<std::size_t>& idx) {
  RatMatrix m;
  for (std::size_t i : idx) {
    RatVector row = vectors[i];
    for (auto& x : row) x *= lengths[i];
    m.push_back(std::move(row));
  }
  return pow(Rational(2), static_cast<long>(idx.size())) * abs_of(determinant(std::move(m)));
}

double log_of(const BigInt& z) {
  long e = 0;
  const double mant = mpz_get_d_2exp(&e, z.get_mpz_t());
  return std::log(mant) + static_cast<double>(e) * std::log(2.0);
}

}  // namespace

Rational evaluate(const Polynomial& f, const Rational& x) {
  Rational y = 0;
  for (std::size_t k = f.size(); k-- > 0;) y = y * x + f[k];
  return y;
}

double evaluate(const Polynomial& f, double x) {
  double y = 0;
  for (std::size_t k = f.size(); k-- > 0;) y = y * x + f[k].get_d();
  return y;
}

Rational box_volume(const RatMatrix& vectors, const std::vector<Rational>& lengths) {
  const std::size_t d = dimension_of(vectors);
  if (lengths.size() != vectors.size()) throw PreconditionError("one length per vector is required");
  if (vectors.size() < d) throw PreconditionError("degenerate basis: fewer vectors than dimensions");
  if (vectors.size() == d) {
    std::vector<std::size_t> all(d);
    for (std::size_t i = 0; i < d; ++i) all[i] = i;
    const Rational v = subset_volume(vectors, lengths, all);
    if (v == 0 && rank(vectors) < d) throw PreconditionError("degenerate basis");
    return v;
  }
  Rational total = 0;
  for_each_subset(vectors.size(), d, [&](const auto& idx) { total += subset_volume(vectors, lengths, idx); });
  return total;
}

Polynomial growth_polynomial(const RatMatrix& vectors, const std::vector<int>& weights,
                             const std::vector<Rational>& lengths) {
  const std::size_t d = dimension_of(vectors);
  if (weights.size() != vectors.size() || lengths.size() != vectors.size())
    throw PreconditionError("one weight and one length per vector are required");
  if (rank(vectors) < d) throw PreconditionError("vectors do not span");
  Polynomial f;
  for_each_subset(vectors.size(), d, [&](const auto& idx) {
    std::size_t deg = 0;
    for (std::size_t i : idx) deg += static_cast<std::size_t>(weights[i]);
    if (f.size() <= deg) f.resize(deg + 1, Rational(0));
    f[deg] += subset_volume(vectors, lengths, idx);
  });
  return f;
}

std::size_t PiecewiseMonomial::piece_of(double x) const {
  std::size_t k = 0;
  while (k + 1 < boundaries.size() && boundaries[k + 1].to_double() <= x) ++k;
  return k;
}

double PiecewiseMonomial::operator()(double x) const {
  const std::size_t k = piece_of(x);
  return coefficients[k].get_d() * std::pow(x, degrees[k]);
}

Rational PiecewiseMonomial::value(const Rational& x) const {
  std::size_t k = 0;
  while (k + 1 < boundaries.size() && compare(x, boundaries[k + 1]) >= 0) ++k;
  return coefficients[k] * pow(x, degrees[k]);
}

int PiecewiseMonomial::decreases() const {
  int n = 0;
  for (std::size_t k = 1; k < degrees.size(); ++k) n += degrees[k] < degrees[k - 1];
  return n;
}

int PiecewiseMonomial::increases() const {
  int n = 0;
  for (std::size_t k = 1; k < degrees.size(); ++k) n += degrees[k] > degrees[k - 1];
  return n;
}

bool PiecewiseMonomial::continuous() const {
  for (std::size_t k = 1; k < degrees.size(); ++k) {
    const Radical& x = boundaries[k];
    const Rational lhs = pow(coefficients[k - 1] / coefficients[k], x.root);
    const Rational rhs = pow(x.base, degrees[k] - degrees[k - 1]);
    if (lhs != rhs) return false;
  }
  return true;
}

PiecewiseMonomial monomial_envelope(const Polynomial& f) {
  std::vector<int> support;
  for (std::size_t k = 0; k < f.size(); ++k) {
    if (f[k] < 0) throw PreconditionError("envelope coefficients must be non-negative");
    if (f[k] > 0) support.push_back(static_cast<int>(k));
  }
  if (support.empty()) throw PreconditionError("envelope of the zero polynomial");
  PiecewiseMonomial h;
  // at x = 1 the largest coefficient wins, ties going to the higher degree
  int cur = support[0];
  for (int k : support)
    if (f[static_cast<std::size_t>(k)] >= f[static_cast<std::size_t>(cur)]) cur = k;
  h.boundaries.push_back(Radical{});
  h.coefficients.push_back(f[static_cast<std::size_t>(cur)]);
  h.degrees.push_back(cur);
  while (true) {
    std::optional<Radical> next;
    int next_deg = -1;
    for (int k : support) {
      if (k <= cur) continue;
      Radical x{f[static_cast<std::size_t>(cur)] / f[static_cast<std::size_t>(k)], k - cur};
      if (!next || compare(x, *next) <= 0) {
        next = x;
        next_deg = k;
      }
    }
    if (!next) break;
    h.boundaries.push_back(*next);
    h.coefficients.push_back(f[static_cast<std::size_t>(next_deg)]);
    h.degrees.push_back(next_deg);
    cur = next_deg;
  }
  return h;
}

std::vector<DoublingEntry> doubling_profile(const BallProfile& p) {
  std::vector<DoublingEntry> out;
  const int r = p.radius();
  for (int n = 1; 2 * n <= r; ++n) {
    DoublingEntry e;
    e.n = n;
    const Int b = p.beta[static_cast<std::size_t>(n)];
    e.doubling = Rational(static_cast<long>(p.beta[static_cast<std::size_t>(2 * n)]), static_cast<long>(b));
    if (3 * n <= r)
      e.tripling = Rational(static_cast<long>(p.beta[static_cast<std::size_t>(3 * n)]), static_cast<long>(b));
    out.push_back(std::move(e));
  }
  return out;
}

BigInt lattice_ball_size(int d, long m) {
  BigInt total = 0;
  for (long k = 0; k <= std::min<long>(d, m); ++k) total += (BigInt(1) << static_cast<mp_bitcnt_t>(k)) * binomial(d, k) * binomial(m, k);
  return total;
}

GrowthFit fit_growth(const BallProfile& p, int anchor, const FitOptions& options) {
  if (anchor < 1) throw PreconditionError("anchor scale must be positive");
  const int r = p.radius();
  if (r < 2 * anchor) throw PreconditionError("profile radius " + std::to_string(r) + " is shorter than twice the anchor");
  GrowthFit fit;
  fit.anchor = anchor;
  auto lb = [&](std::size_t m) { return std::log(static_cast<double>(p.beta[m])); };

  // local degree: the lattice dimension whose l1 balls have the closest doubling ratio at m
  for (int m = anchor; 2 * m <= r; ++m) {
    const double ratio = lb(static_cast<std::size_t>(2 * m)) - lb(static_cast<std::size_t>(m));
    int best = 0;
    double best_err = std::abs(ratio);
    for (int d = 1; d <= options.max_degree; ++d) {
      const double model = log_of(lattice_ball_size(d, 2 * m)) - log_of(lattice_ball_size(d, m));
      const double err = std::abs(ratio - model);
      if (err < best_err) {
        best_err = err;
        best = d;
      }
    }
    fit.local_degree.push_back(best);
  }

  struct Run {
    std::size_t begin, end;
    int degree;
  };
  std::vector<Run> runs;
  for (std::size_t i = 0; i < fit.local_degree.size(); ++i) {
    if (runs.empty() || runs.back().degree != fit.local_degree[i]) runs.push_back({i, i + 1, fit.local_degree[i]});
    else runs.back().end = i + 1;
  }
  auto coalesce = [&] {
    std::vector<Run> out;
    for (const auto& run : runs) {
      if (!out.empty() && out.back().degree == run.degree) out.back().end = run.end;
      else out.push_back(run);
    }
    runs = std::move(out);
  };
  while (runs.size() > 1) {
    auto it = std::find_if(runs.begin(), runs.end(), [&](const Run& run) {
      return run.end - run.begin < static_cast<std::size_t>(options.min_run);
    });
    if (it == runs.end()) break;
    if (it == runs.begin()) {
      (it + 1)->begin = it->begin;
    } else {
      (it - 1)->end = it->end;
    }
    runs.erase(it);
    coalesce();
  }

  PiecewiseMonomial& f = fit.f;
  for (std::size_t k = 0; k < runs.size(); ++k) {
    const Rational x = k == 0 ? Rational(1) : Rational(static_cast<long>(anchor + static_cast<int>(runs[k].begin)), anchor);
    f.boundaries.push_back(Radical{x, 1});
    f.degrees.push_back(runs[k].degree);
    f.coefficients.push_back(k == 0 ? Rational(1) : f.coefficients[k - 1] * pow(x, runs[k - 1].degree - runs[k].degree));
  }

  double lo = 0, hi = 0;
  bool first = true;
  const double base = lb(static_cast<std::size_t>(anchor));
  for (int m = anchor; m <= r; ++m) {
    const double x = static_cast<double>(m) / anchor;
    const double diff = lb(static_cast<std::size_t>(m)) - base - std::log(f(x));
    if (first || diff < lo) lo = diff;
    if (first || diff > hi) hi = diff;
    first = false;
    fit.residual = std::max(fit.residual, std::abs(diff));
  }
  fit.centered_residual = (hi - lo) / 2;
  return fit;
}

Rational increase_bound(int d) {
  const Rational x(d);
  return x * x * x / 6 - x * x / 2 + x / 3;
}

int ConvexBody::dimension() const {
  if (kind == Kind::Box) return static_cast<int>(half_widths.size());
  if (kind == Kind::Polygon) return 2;
  return rows.empty() ? 0 : static_cast<int>(rows[0].size());
}

namespace {

Rational dot(const RatVector& a, const RatVector& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

/// Calls visit(point) for each integer point of the box prod [-b_i, b_i].
template <class Visit>
void for_each_lattice_point(const std::vector<Int>& b, Visit&& visit) {
  const std::size_t d = b.size();
  RatVector p(d);
  std::vector<Int> cur(d);
  for (std::size_t i = 0; i < d; ++i) cur[i] = -b[i];
  if (d == 0) {
    visit(p);
    return;
  }
  while (true) {
    for (std::size_t i = 0; i < d; ++i) p[i] = Rational(static_cast<long>(cur[i]));
    visit(p);
    std::size_t i = 0;
    while (i < d && cur[i] == b[i]) {
      cur[i] = -b[i];
      ++i;
    }
    if (i == d) return;
    ++cur[i];
  }
}

LatticeCountReport zonotope_count(const ConvexBody& k) {
  const std::size_t d = static_cast<std::size_t>(k.dimension());
  if (d == 0 || d > 3) throw PreconditionError("zonotopes are supported in dimensions 1 to 3");
  for (const auto& g : k.rows)
    if (g.size() != d) throw PreconditionError("zonotope generators must share one dimension");
  if (rank(k.rows) < d) throw PreconditionError("zonotope is degenerate");
  LatticeCountReport out;
  out.volume = 0;
  for_each_subset(k.rows.size(), d, [&](const auto& idx) {
    RatMatrix m;
    for (std::size_t i : idx) m.push_back(k.rows[i]);
    out.volume += abs_of(determinant(std::move(m)));
  });
  out.volume *= pow(Rational(2), static_cast<long>(d));

  std::vector<RatVector> normals;
  if (d == 1) {
    normals.push_back({Rational(1)});
  } else if (d == 2) {
    for (const auto& g : k.rows)
      if (g[0] != 0 || g[1] != 0) normals.push_back({-g[1], g[0]});
  } else {
    for (std::size_t a = 0; a < k.rows.size(); ++a)
      for (std::size_t b = a + 1; b < k.rows.size(); ++b) {
        const auto& u = k.rows[a];
        const auto& v = k.rows[b];
        RatVector n{u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]};
        if (n[0] != 0 || n[1] != 0 || n[2] != 0) normals.push_back(std::move(n));
      }
  }
  std::vector<Rational> support;
  for (const auto& n : normals) {
    Rational h = 0;
    for (const auto& g : k.rows) h += abs_of(dot(n, g));
    support.push_back(h);
  }
  std::vector<Int> bound(d, 0);
  for (std::size_t i = 0; i < d; ++i) {
    Rational s = 0;
    for (const auto& g : k.rows) s += abs_of(g[i]);
    bound[i] = to_int(floor_of(s));
  }
  out.points = 0;
  for_each_lattice_point(bound, [&](const RatVector& p) {
    for (std::size_t j = 0; j < normals.size(); ++j)
      if (abs_of(dot(normals[j], p)) > support[j]) return;
    ++out.points;
  });
  return out;
}

LatticeCountReport polygon_count(const ConvexBody& k) {
  const auto& v = k.rows;
  if (v.size() < 3) throw PreconditionError("a polygon needs at least three vertices");
  for (const auto& p : v)
    if (p.size() != 2) throw PreconditionError("polygon vertices must be planar");
  for (const auto& p : v)
    if (std::find(v.begin(), v.end(), RatVector{-p[0], -p[1]}) == v.end())
      throw PreconditionError("polygon is not centrally symmetric");
  Rational twice_area = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const auto& a = v[i];
    const auto& b = v[(i + 1) % v.size()];
    twice_area += a[0] * b[1] - a[1] * b[0];
  }
  const int orientation = twice_area > 0 ? 1 : -1;
  LatticeCountReport out;
  out.volume = abs_of(twice_area) / 2;
  if (out.volume == 0) throw PreconditionError("polygon is degenerate");
  std::vector<Int> bound(2, 0);
  for (const auto& p : v)
    for (std::size_t i = 0; i < 2; ++i) bound[i] = std::max(bound[i], to_int(floor_of(abs_of(p[i]))));
  out.points = 0;
  for_each_lattice_point(bound, [&](const RatVector& p) {
    for (std::size_t i = 0; i < v.size(); ++i) {
      const auto& a = v[i];
      const auto& b = v[(i + 1) % v.size()];
      const Rational cross = (b[0] - a[0]) * (p[1] - a[1]) - (b[1] - a[1]) * (p[0] - a[0]);
      if (cross * orientation < 0) return;
    }
    ++out.points;
  });
  return out;
}

}  // namespace

LatticeCountReport van_der_corput_check(const ConvexBody& k) {
  LatticeCountReport out;
  const int d = k.dimension();
  switch (k.kind) {
    case ConvexBody::Kind::Box:
      out.points = 1;
      out.volume = 1;
      for (const auto& w : k.half_widths) {
        if (w < 0) throw PreconditionError("box half-widths must be non-negative");
        out.points *= 2 * floor_of(w) + 1;
        out.volume *= 2 * w;
      }
      break;
    case ConvexBody::Kind::Zonotope:
      out = zonotope_count(k);
      break;
    case ConvexBody::Kind::Polygon:
      out = polygon_count(k);
      break;
  }
  out.holds = Rational(out.points) * pow(Rational(2), d) >= out.volume;
  return out;
}

CramerSelection cramer_selection(const std::vector<RatVector>& v, const std::vector<Rational>& m) {
  if (v.size() != m.size()) throw PreconditionError("one length per vector is required");
  const std::size_t d = dimension_of(v);
  std::vector<RatVector> w = v;
  for (std::size_t k = 0; k < w.size(); ++k)
    for (auto& x : w[k]) x *= m[k];
  CramerSelection out;
  Rational best = 0;
  for_each_subset(w.size(), d, [&](const auto& idx) {
    RatMatrix a;
    for (std::size_t i : idx) a.push_back(w[i]);
    const Rational det = abs_of(determinant(std::move(a)));
    if (det > best) {
      best = det;
      out.indices = idx;
    }
  });
  if (best == 0) throw PreconditionError("vectors do not span");
  RatMatrix cols(d, RatVector(d));
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t row = 0; row < d; ++row) cols[row][j] = w[out.indices[j]][row];
  out.certified = true;
  for (const auto& target : w) {
    RatVector y = solve(cols, target);
    for (const auto& c : y)
      if (abs_of(c) > 1) out.certified = false;
    out.coefficients.push_back(std::move(y));
  }
  return out;
}

SumsetReport sumset_lower_bound(const Group& g, const ElementSet& a, const ElementSet& b) {
  SumsetReport out;
  out.product_size = static_cast<Int>(product_set(g, a, b).size());
  out.bound = static_cast<Int>(a.size() + b.size()) - 1;
  out.holds = out.product_size >= out.bound;
  return out;
}

QuotientKernelReport quotient_kernel_bound(const Group& g, const std::vector<Element>& a, const Subgroup& h, int m,
                                           int n, std::size_t cap) {
  if (m < 0 || n < 0) throw PreconditionError("powers must be non-negative");
  BallOptions opts;
  opts.cap = cap;
  const Ball ball = grow_ball(g, {g.identity()}, a, m + n, opts);
  if (ball.truncated) throw ResourceError("powers of A exceed the cap");
  QuotientKernelReport out;
  out.power_size = static_cast<Int>(ball.layer_end[static_cast<std::size_t>(m + n)]);
  std::set<Element> keys;
  for (std::size_t k = 0; k < ball.layer_end[static_cast<std::size_t>(m)]; ++k)
    keys.insert(h.coset_key(ball.elements.element(k)));
  out.coset_count = static_cast<Int>(keys.size());
  for (std::size_t k = 0; k < ball.layer_end[static_cast<std::size_t>(n)]; ++k)
    if (h.contains(ball.elements.element(k))) ++out.slice_size;
  out.holds = out.power_size >= out.coset_count * out.slice_size;
  return out;
}

}  // namespace growthlab
