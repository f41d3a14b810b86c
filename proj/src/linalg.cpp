#include "growthlab/linalg.hpp"

#include <algorithm>
#include <utility>

namespace growthlab {

HermiteBasis::HermiteBasis(const IntMatrix& input, std::size_t width) : width_(width) {
  IntMatrix work;
  for (const auto& r : input) {
    if (r.size() != width) throw PreconditionError("lattice row has wrong width");
    if (std::any_of(r.begin(), r.end(), [](const BigInt& x) { return x != 0; })) work.push_back(r);
  }
  std::size_t top = 0;
  for (std::size_t col = 0; col < width && top < work.size(); ++col) {
    while (true) {
      std::size_t best = work.size();
      for (std::size_t i = top; i < work.size(); ++i)
        if (work[i][col] != 0 && (best == work.size() || abs(work[i][col]) < abs(work[best][col])))
          best = i;
      if (best == work.size()) break;
      std::swap(work[top], work[best]);
      bool done = true;
      for (std::size_t i = top + 1; i < work.size(); ++i) {
        if (work[i][col] == 0) continue;
        BigInt q;
        mpz_fdiv_q(q.get_mpz_t(), work[i][col].get_mpz_t(), work[top][col].get_mpz_t());
        for (std::size_t k = col; k < width; ++k) work[i][k] -= q * work[top][k];
        if (work[i][col] != 0) done = false;
      }
      if (done) break;
    }
    if (top < work.size() && work[top][col] != 0) {
      if (work[top][col] < 0)
        for (auto& x : work[top]) x = -x;
      for (std::size_t i = 0; i < top; ++i) {
        BigInt q;
        mpz_fdiv_q(q.get_mpz_t(), work[i][col].get_mpz_t(), work[top][col].get_mpz_t());
        if (q != 0)
          for (std::size_t k = col; k < width; ++k) work[i][k] -= q * work[top][k];
      }
      pivots_.push_back(col);
      ++top;
      // drop rows that became zero
      work.erase(std::remove_if(work.begin() + static_cast<long>(top), work.end(),
                                [](const IntVector& r) {
                                  return std::all_of(r.begin(), r.end(),
                                                     [](const BigInt& x) { return x == 0; });
                                }),
                 work.end());
    }
  }
  work.resize(top);
  rows_ = std::move(work);
}

IntVector HermiteBasis::reduce(IntVector v) const {
  if (v.size() != width_) throw PreconditionError("vector has wrong width");
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    std::size_t col = pivots_[i];
    BigInt q;
    mpz_fdiv_q(q.get_mpz_t(), v[col].get_mpz_t(), rows_[i][col].get_mpz_t());
    if (q != 0)
      for (std::size_t k = col; k < width_; ++k) v[k] -= q * rows_[i][k];
  }
  return v;
}

bool HermiteBasis::contains(const IntVector& v) const {
  auto r = reduce(v);
  return std::all_of(r.begin(), r.end(), [](const BigInt& x) { return x == 0; });
}

BigInt HermiteBasis::index() const {
  if (rows_.size() != width_) return 0;
  BigInt d = 1;
  for (std::size_t i = 0; i < rows_.size(); ++i) d *= rows_[i][pivots_[i]];
  return d;
}

std::vector<BigInt> smith_invariants(IntMatrix m) {
  std::vector<BigInt> diag;
  if (m.empty()) return diag;
  const std::size_t rows = m.size(), cols = m[0].size();
  std::size_t t = 0;
  while (t < rows && t < cols) {
    // pick the smallest nonzero entry in the trailing block as pivot
    std::size_t pr = rows, pc = cols;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j)
        if (m[i][j] != 0 && (pr == rows || abs(m[i][j]) < abs(m[pr][pc]))) pr = i, pc = j;
    if (pr == rows) break;
    std::swap(m[t], m[pr]);
    for (auto& row : m) std::swap(row[t], row[pc]);
    bool clean = false;
    while (!clean) {
      clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (m[i][t] == 0) continue;
        BigInt q;
        mpz_fdiv_q(q.get_mpz_t(), m[i][t].get_mpz_t(), m[t][t].get_mpz_t());
        for (std::size_t j = t; j < cols; ++j) m[i][j] -= q * m[t][j];
        if (m[i][t] != 0) {
          std::swap(m[t], m[i]);
          clean = false;
        }
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (m[t][j] == 0) continue;
        BigInt q;
        mpz_fdiv_q(q.get_mpz_t(), m[t][j].get_mpz_t(), m[t][t].get_mpz_t());
        for (std::size_t i = t; i < rows; ++i) m[i][j] -= q * m[i][t];
        if (m[t][j] != 0) {
          for (auto& row : m) std::swap(row[t], row[j]);
          clean = false;
        }
      }
      if (clean) {
        // enforce divisibility of the trailing block by the pivot
        for (std::size_t i = t + 1; i < rows && clean; ++i)
          for (std::size_t j = t + 1; j < cols; ++j)
            if (m[i][j] % m[t][t] != 0) {
              for (std::size_t k = t; k < cols; ++k) m[t][k] += m[i][k];
              clean = false;
              break;
            }
      }
    }
    diag.push_back(abs(m[t][t]));
    ++t;
  }
  return diag;
}

namespace {

// Row-reduces in place; returns rank and the determinant sign/product when square.
std::size_t eliminate(RatMatrix& m, Rational* det) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size(), cols = m[0].size();
  std::size_t r = 0;
  Rational d = 1;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) {
      d = 0;
      continue;
    }
    if (p != r) {
      std::swap(m[p], m[r]);
      d = -d;
    }
    d *= m[r][c];
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (m[i][c] == 0) continue;
      Rational f = m[i][c] / m[r][c];
      for (std::size_t k = c; k < cols; ++k) m[i][k] -= f * m[r][k];
    }
    ++r;
  }
  if (det) *det = (r == rows && rows == cols) ? d : Rational(0);
  return r;
}

}  // namespace

std::size_t rank(RatMatrix m) { return eliminate(m, nullptr); }

Rational determinant(RatMatrix m) {
  if (m.empty()) return 1;
  if (m.size() != m[0].size()) throw PreconditionError("determinant of non-square matrix");
  Rational d;
  eliminate(m, &d);
  return d;
}

RatVector solve(RatMatrix a, RatVector b) {
  const std::size_t n = a.size();
  if (b.size() != n) throw PreconditionError("solve: dimension mismatch");
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].size() != n) throw PreconditionError("solve: matrix is not square");
    a[i].push_back(b[i]);
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) throw PreconditionError("solve: singular matrix");
    std::swap(a[p], a[c]);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a[i][c] == 0) continue;
      Rational f = a[i][c] / a[c][c];
      for (std::size_t k = c; k <= n; ++k) a[i][k] -= f * a[c][k];
    }
  }
  RatVector x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = a[i][n] / a[i][i];
  return x;
}

SparseRowSpace::Row SparseRowSpace::reduced(Row v) const {
  auto it = v.begin();
  while (it != v.end()) {
    auto b = basis_.find(it->first);
    if (b == basis_.end()) {
      ++it;
      continue;
    }
    Rational f = it->second;
    std::size_t col = it->first;
    for (const auto& [k, x] : b->second) {
      Rational& slot = v[k];
      slot -= f * x;
    }
    // erase zeros at or after col, then resume after col
    for (auto z = v.lower_bound(col); z != v.end();) {
      if (z->second == 0)
        z = v.erase(z);
      else
        ++z;
    }
    it = v.upper_bound(col);
  }
  return v;
}

bool SparseRowSpace::add(Row v) {
  for (auto it = v.begin(); it != v.end();)
    it = it->second == 0 ? v.erase(it) : std::next(it);
  v = reduced(std::move(v));
  if (v.empty()) return false;
  Rational lead = v.begin()->second;
  for (auto& [k, x] : v) x /= lead;
  std::size_t pivot = v.begin()->first;
  // keep existing rows free of the new pivot column
  for (auto& [col, row] : basis_) {
    auto hit = row.find(pivot);
    if (hit == row.end()) continue;
    Rational f = hit->second;
    for (const auto& [k, x] : v) row[k] -= f * x;
    for (auto z = row.begin(); z != row.end();)
      z = z->second == 0 ? row.erase(z) : std::next(z);
  }
  basis_.emplace(pivot, std::move(v));
  return true;
}

bool SparseRowSpace::contains(Row v) const {
  for (auto it = v.begin(); it != v.end();)
    it = it->second == 0 ? v.erase(it) : std::next(it);
  return reduced(std::move(v)).empty();
}

}  // namespace growthlab
