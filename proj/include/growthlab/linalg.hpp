// Exact integer and rational linear algebra.
#pragma once

#include <map>
#include <vector>

#include "growthlab/arith.hpp"

namespace growthlab {

using IntVector = std::vector<BigInt>;
using IntMatrix = std::vector<IntVector>;
using RatVector = std::vector<Rational>;
using RatMatrix = std::vector<RatVector>;

/// Row-style Hermite normal form of the lattice spanned by the rows.
/// Rows are in echelon form with positive pivots; entries above a pivot lie in [0, pivot).
class HermiteBasis {
 public:
  HermiteBasis() = default;
  HermiteBasis(const IntMatrix& rows, std::size_t width);

  std::size_t width() const { return width_; }
  const IntMatrix& rows() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  std::size_t rank() const { return rows_.size(); }

  /// Canonical representative of v modulo the lattice.
  IntVector reduce(IntVector v) const;
  bool contains(const IntVector& v) const;

  /// Absolute index of the lattice inside Z^width, or 0 when not full rank.
  BigInt index() const;

  bool operator==(const HermiteBasis& other) const {
    return width_ == other.width_ && rows_ == other.rows_;
  }

 private:
  std::size_t width_ = 0;
  IntMatrix rows_;
  std::vector<std::size_t> pivots_;
};

/// Nonzero invariant factors of an integer matrix, in divisibility order.
std::vector<BigInt> smith_invariants(IntMatrix m);

std::size_t rank(RatMatrix m);
Rational determinant(RatMatrix m);

/// Solves a x = b for square nonsingular a; throws PreconditionError otherwise.
RatVector solve(RatMatrix a, RatVector b);

/// Incrementally maintained row space over Q for sparse vectors.
class SparseRowSpace {
 public:
  using Row = std::map<std::size_t, Rational>;

  /// Adds v; returns true when it increased the rank.
  bool add(Row v);
  bool contains(Row v) const;
  std::size_t rank() const { return basis_.size(); }

 private:
  Row reduced(Row v) const;
  std::map<std::size_t, Row> basis_;  // pivot column -> row with unit pivot
};

}  // namespace growthlab
