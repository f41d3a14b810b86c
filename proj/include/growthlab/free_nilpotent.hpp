// Free nilpotent groups: basic commutators, collection, Lie coordinates.
#pragma once

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "growthlab/group.hpp"

namespace growthlab {

/// One basic commutator: a free generator, or [left, right] of earlier entries.
struct BasicCommutator {
  int weight = 1;
  int left = -1;   // -1 for free generators
  int right = -1;  // generator number for free generators
  std::vector<int> content;  // multiplicity of each free generator

  bool is_generator() const { return left < 0; }
};

/// Basic commutators of weight <= c on r generators, ordered by weight,
/// then by content (larger multiplicity of earlier generators first), then by (left, right).
class HallBasis {
 public:
  static constexpr long kDefaultCap = 1L << 24;

  HallBasis(int rank, int nilpotency_class, long cap = kDefaultCap);

  int rank() const { return rank_; }
  int nilpotency_class() const { return class_; }
  std::size_t size() const { return entries_.size(); }
  const BasicCommutator& operator[](std::size_t i) const { return entries_[i]; }
  const std::vector<BasicCommutator>& entries() const { return entries_; }

  /// Index of [u_j, u_i] when it is itself basic, or -1.
  int bracket_index(int j, int i) const;
  /// Number of basis entries of each weight 1..c.
  std::vector<int> weight_counts() const;
  std::string describe(std::size_t i) const;

 private:
  int rank_;
  int class_;
  std::vector<BasicCommutator> entries_;
  std::map<std::pair<int, int>, int> lookup_;
};

/// Dimension of the degree-k part of the free Lie algebra on r generators.
long witt_dimension(int rank, int degree);

/// Growth degree sum_k k * witt_dimension(rank, k) of the free nilpotent group.
long bass_guivarch_degree(int rank, int nilpotency_class);

/// Growth degree sum_i i * ranks[i-1] from the ranks of the lower central quotients.
long bass_guivarch(const std::vector<long>& ranks);

/// Normal form u_1^{e_1} .. u_d^{e_d} as (index, exponent) pairs with nonzero exponents.
using SparseWord = std::vector<std::pair<int, Int>>;

/// Collection from the left in the free nilpotent group, with conjugation
/// relations precomputed by the collector itself.
class Collector {
 public:
  explicit Collector(const HallBasis& basis);

  std::size_t size() const { return weight_.size(); }

  /// Exponent vector of the product of letters u_{index}^{exponent}.
  std::vector<Int> collect(const SparseWord& word) const;
  std::vector<Int> multiply(const std::vector<Int>& a, const std::vector<Int>& b) const;
  std::vector<Int> inverse(const std::vector<Int>& a) const;
  /// Multiplies e in place by u_k^n.
  void multiply_letter(std::vector<Int>& e, int k, Int n) const;

 private:
  void step(std::vector<Int>& e, int k, int sign) const;
  std::vector<Int> commutator(const std::vector<Int>& a, const std::vector<Int>& b) const;

  const HallBasis* basis_;
  std::vector<int> weight_;
  std::vector<int> central_from_;  // first index commuting with every later letter, per k
  // conj_[k][m]: u_k^{-1} u_m u_k, conj_inv_[k][m]: u_k u_m u_k^{-1}, and inverses of both
  std::vector<std::vector<SparseWord>> conj_, conj_inverse_, conj_inv_, conj_inv_inverse_;
};

/// Free nilpotent group of rank r and class c in Mal'cev coordinates.
class FreeNilpotentGroup final : public Group {
 public:
  using Group::inverse;
  using Group::multiply;
  FreeNilpotentGroup(int rank, int nilpotency_class);

  std::size_t width() const override { return basis_->size(); }
  void multiply(const Int* a, const Int* b, Int* out) const override;
  void inverse(const Int* a, Int* out) const override;
  std::string fingerprint() const override;
  bool is_abelian() const override { return basis_->nilpotency_class() == 1 || basis_->rank() == 1; }
  std::optional<int> hirsch_length() const override { return static_cast<int>(basis_->size()); }
  std::optional<int> homogeneous_dimension() const override;
  std::optional<int> nilpotency_class() const override { return basis_->nilpotency_class(); }

  const HallBasis& basis() const { return *basis_; }
  const Collector& collector() const { return *collector_; }
  Element generator(int i) const;

 private:
  std::shared_ptr<HallBasis> basis_;
  std::shared_ptr<Collector> collector_;
};

/// Truncated free associative algebra over Q: words of length <= class.
using NcPolynomial = std::map<std::string, Rational>;

NcPolynomial nc_add(const NcPolynomial& a, const NcPolynomial& b, const Rational& scale = 1);
NcPolynomial nc_multiply(const NcPolynomial& a, const NcPolynomial& b, int max_degree);
NcPolynomial nc_bracket(const NcPolynomial& a, const NcPolynomial& b, int max_degree);
NcPolynomial nc_exp(const NcPolynomial& a, int max_degree);
NcPolynomial nc_log(const NcPolynomial& one_plus_a, int max_degree);

/// One term of the Baker-Campbell-Hausdorff series: coefficient times the
/// right-nested bracket of a word in the two letters 'X' and 'Y'.
struct BchTerm {
  std::string word;
  Rational coefficient;
};

/// Dynkin's series through total degree max_degree, with like words combined.
std::vector<BchTerm> dynkin_series(int max_degree);

/// Free nilpotent Lie algebra over Q in the basis of basic Lie brackets.
class LieStructure {
 public:
  static constexpr std::size_t kDefaultCap = 256;

  explicit LieStructure(const HallBasis& basis, std::size_t cap = kDefaultCap);

  std::size_t size() const { return basis_.size(); }
  const HallBasis& basis() const { return basis_; }

  /// Structure constants: [e_a, e_b] = sum_k c_k e_k, stored as (k, c_k).
  const std::vector<std::pair<int, Rational>>& bracket_of(int a, int b) const;
  RatVector bracket(const RatVector& x, const RatVector& y) const;
  RatVector bch(const RatVector& x, const RatVector& y) const;
  const std::vector<BchTerm>& bch_terms() const { return bch_terms_; }

  /// Image of a basis element in the truncated free associative algebra.
  const NcPolynomial& embedding(int k) const { return images_[static_cast<std::size_t>(k)]; }
  /// Coordinates of a Lie polynomial in the bracket basis.
  RatVector coordinates(const NcPolynomial& lie_polynomial) const;

  /// Lie coordinates of log(u_1^{a_1} .. u_d^{a_d}); exponents may be rational.
  RatVector log(const RatVector& malcev) const;
  /// Mal'cev coordinates of exp(x).
  RatVector exp(const RatVector& lie) const;
  /// Product of two elements given in rational Mal'cev coordinates.
  RatVector multiply(const RatVector& a, const RatVector& b) const;
  /// a^eta = exp(eta log a) in Mal'cev coordinates.
  RatVector power(const RatVector& a, const Rational& eta) const;

  const RatVector& log_of_basis(int k) const { return log_basis_[static_cast<std::size_t>(k)]; }

 private:
  HallBasis basis_;
  std::vector<NcPolynomial> images_;
  std::vector<std::vector<std::vector<std::pair<int, Rational>>>> table_;
  // per degree: chosen monomials and the inverse of the square system on them
  std::vector<std::vector<std::string>> probe_words_;
  std::vector<RatMatrix> probe_inverse_;
  std::vector<std::vector<int>> by_weight_;
  std::vector<BchTerm> bch_terms_;
  std::vector<RatVector> log_basis_;
};

RatVector to_rational(const std::vector<Int>& v);

}  // namespace growthlab
