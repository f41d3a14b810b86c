// Box volumes, growth polynomials, piecewise-monomial envelopes and growth fits.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "growthlab/arith.hpp"
#include "growthlab/ball.hpp"
#include "growthlab/linalg.hpp"
#include "growthlab/subgroup.hpp"

namespace growthlab {

/// Polynomial with exact coefficients; entry k multiplies x^k.
using Polynomial = std::vector<Rational>;

Rational evaluate(const Polynomial& f, const Rational& x);
double evaluate(const Polynomial& f, double x);

/// Volume of the real box sum_i [-L_i, L_i] e_i. With more vectors than dimensions, the sum of the
/// volumes of all boxes on d of them (the growth polynomial at x = 1).
Rational box_volume(const RatMatrix& vectors, const std::vector<Rational>& lengths);

/// f(x) = sum over d-subsets I of vol(B(e_I; L_I)) x^{sum of weights over I}.
Polynomial growth_polynomial(const RatMatrix& vectors, const std::vector<int>& weights,
                             const std::vector<Rational>& lengths);

/// f(x) = C_i x^{d_i} on [x_i, x_{i+1}), with x_0 = 1 and the last piece unbounded.
struct PiecewiseMonomial {
  std::vector<Radical> boundaries;  // x_0 .. x_{k-1}
  std::vector<Rational> coefficients;
  std::vector<int> degrees;

  std::size_t pieces() const { return degrees.size(); }
  /// Index of the piece containing x >= 1.
  std::size_t piece_of(double x) const;
  double operator()(double x) const;
  /// Exact value when every boundary is rational.
  Rational value(const Rational& x) const;
  int decreases() const;
  int increases() const;
  /// Continuity C_i x_i^{d_i} = C_{i+1} x_i^{d_{i+1}} at each interior boundary, decided exactly.
  bool continuous() const;
};

/// h(x) = max_k a_k x^k on [1, infinity), with exact crossing points.
PiecewiseMonomial monomial_envelope(const Polynomial& f);

struct DoublingEntry {
  int n = 0;
  Rational doubling;                // beta(2n) / beta(n)
  std::optional<Rational> tripling;  // beta(3n) / beta(n) when 3n <= R
};

std::vector<DoublingEntry> doubling_profile(const BallProfile& p);

/// Size of the l1 ball of radius m in Z^d.
BigInt lattice_ball_size(int d, long m);

struct GrowthFit {
  PiecewiseMonomial f;           // in the rescaled variable x = m / anchor
  int anchor = 1;
  std::vector<int> local_degree;  // calibrated estimate for m = anchor .. R/2
  double residual = 0;           // sup |ln beta(m) - ln(beta(n) f(m/n))| over anchor <= m <= R
  double centered_residual = 0;  // the same after the best constant rescaling
};

struct FitOptions {
  int max_degree = 16;
  int min_run = 2;  // shorter constant-degree runs are merged into a neighbour
};

/// Piecewise-monomial model of a ball profile; throws PreconditionError when R < 2 * anchor.
GrowthFit fit_growth(const BallProfile& p, int anchor, const FitOptions& options = {});

/// Upper bound d^3/6 - d^2/2 + d/3 on the number of degree increases.
Rational increase_bound(int d);

/// Centrally symmetric convex bodies with exact lattice-point counts.
struct ConvexBody {
  enum class Kind { Box, Zonotope, Polygon };
  Kind kind = Kind::Box;
  std::vector<Rational> half_widths;        // box: [-w_i, w_i]
  std::vector<std::vector<Rational>> rows;  // zonotope generators, or polygon vertices in order
  int dimension() const;
};

struct LatticeCountReport {
  BigInt points;
  Rational volume;
  bool holds = false;  // points >= volume / 2^d
};

LatticeCountReport van_der_corput_check(const ConvexBody& k);

struct CramerSelection {
  std::vector<std::size_t> indices;
  /// coefficients[k] solves M_k v_k = sum_j y_j M_{i_j} v_{i_j}
  std::vector<RatVector> coefficients;
  bool certified = false;  // every |y_j| <= 1
};

CramerSelection cramer_selection(const std::vector<RatVector>& v, const std::vector<Rational>& m);

struct SumsetReport {
  Int product_size = 0;
  Int bound = 0;
  bool holds = false;
};

/// |AB| >= |A| + |B| - 1 (stated for torsion-free abelian groups).
SumsetReport sumset_lower_bound(const Group& g, const ElementSet& a, const ElementSet& b);

struct QuotientKernelReport {
  Int power_size = 0;   // |A^{m+n}|
  Int coset_count = 0;  // |A^m H / H|
  Int slice_size = 0;   // |A^n intersect H|
  bool holds = false;
};

QuotientKernelReport quotient_kernel_bound(const Group& g, const std::vector<Element>& a, const Subgroup& h, int m,
                                           int n, std::size_t cap = 5'000'000);

}  // namespace growthlab
