// Finitely generated groups with canonical-form elements.
#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "growthlab/arith.hpp"
#include "growthlab/linalg.hpp"

namespace growthlab {

/// Canonical coordinates of a group element.
using Element = std::vector<Int>;

/// Interface implemented by every group family.
/// Elements are fixed-width coordinate vectors in canonical form.
class Group {
 public:
  virtual ~Group() = default;

  virtual std::size_t width() const = 0;
  virtual void multiply(const Int* a, const Int* b, Int* out) const = 0;
  virtual void inverse(const Int* a, Int* out) const = 0;
  /// Stable identifier used in reports and cache keys.
  virtual std::string fingerprint() const = 0;

  /// Brings arbitrary coordinates into canonical form (the identity map for free families).
  virtual void canonicalize(Int*) const {}
  virtual std::optional<BigInt> order() const { return std::nullopt; }
  virtual bool is_abelian() const { return false; }
  /// Rank and weighted rank of the torsion-free nilpotent lattice, when the family is one.
  virtual std::optional<int> hirsch_length() const { return std::nullopt; }
  virtual std::optional<int> homogeneous_dimension() const { return std::nullopt; }
  virtual std::optional<int> nilpotency_class() const { return std::nullopt; }
  /// Key identifying the left coset g Z(G); only provided by families with an explicit center.
  virtual std::optional<Element> center_coset_key(const Element&) const { return std::nullopt; }

  Element identity() const { return Element(width(), 0); }
  Element multiply(const Element& a, const Element& b) const;
  Element inverse(const Element& a) const;
  Element canonical(Element a) const;
  Element power(const Element& a, Int k) const;
  /// [a, b] = a^-1 b^-1 a b.
  Element commutator(const Element& a, const Element& b) const;
  Element product(const std::vector<Element>& word) const;
  bool is_identity(const Element& a) const;
  bool commute(const Element& a, const Element& b) const;
};

using GroupPtr = std::shared_ptr<const Group>;

struct AbelianSpec {
  std::size_t rank = 1;
  IntMatrix relations;  // rows span the relation lattice
};

struct FreeNilpotentSpec {
  int rank = 2;
  int nilpotency_class = 2;
};

struct HeisenbergSpec {
  enum class Quotient { None, Center, XZ, Full };
  Quotient quotient = Quotient::None;
  Int modulus = 0;
};

struct SemidirectSpec {
  std::size_t dimension = 2;
  std::vector<std::vector<std::vector<Int>>> matrices;  // generators of the finite linear part
};

struct FiniteTableSpec {
  std::vector<std::vector<int>> table;
};

struct FiliformSpec {
  int dimension = 3;
};

using GroupSpec = std::variant<AbelianSpec, FreeNilpotentSpec, HeisenbergSpec, SemidirectSpec,
                               FiniteTableSpec, FiliformSpec>;

GroupPtr make_group(const GroupSpec& spec);

/// Abelian group Z^rank modulo a relation lattice.
class AbelianGroup final : public Group {
 public:
  using Group::inverse;
  using Group::multiply;
  explicit AbelianGroup(const AbelianSpec& spec);
  std::size_t width() const override { return rank_; }
  void multiply(const Int* a, const Int* b, Int* out) const override;
  void inverse(const Int* a, Int* out) const override;
  void canonicalize(Int* a) const override;
  std::string fingerprint() const override;
  std::optional<BigInt> order() const override;
  bool is_abelian() const override { return true; }
  std::optional<int> hirsch_length() const override;
  std::optional<int> homogeneous_dimension() const override { return hirsch_length(); }
  std::optional<int> nilpotency_class() const override { return 1; }
  std::optional<Element> center_coset_key(const Element&) const override { return Element{}; }

  const HermiteBasis& relations() const { return hnf_; }

 private:
  std::size_t rank_;
  HermiteBasis hnf_;
  std::vector<std::vector<Int>> rows_;
  std::vector<std::size_t> pivots_;
};

/// Integer Heisenberg group in coordinates x^a y^b z^c with z = [y, x], and its quotients.
class HeisenbergGroup final : public Group {
 public:
  using Group::inverse;
  using Group::multiply;
  explicit HeisenbergGroup(const HeisenbergSpec& spec);
  std::size_t width() const override { return 3; }
  void multiply(const Int* a, const Int* b, Int* out) const override;
  void inverse(const Int* a, Int* out) const override;
  void canonicalize(Int* a) const override;
  std::string fingerprint() const override;
  std::optional<BigInt> order() const override;
  std::optional<int> hirsch_length() const override;
  std::optional<int> homogeneous_dimension() const override;
  std::optional<int> nilpotency_class() const override { return 2; }
  std::optional<Element> center_coset_key(const Element& g) const override;

  const HeisenbergSpec& spec() const { return spec_; }

 private:
  HeisenbergSpec spec_;
};

/// Z^d semidirect a finite subgroup of GL_d(Z); coordinates (v_1..v_d, index of matrix).
class SemidirectGroup final : public Group {
 public:
  using Group::inverse;
  using Group::multiply;
  explicit SemidirectGroup(const SemidirectSpec& spec);
  std::size_t width() const override { return d_ + 1; }
  void multiply(const Int* a, const Int* b, Int* out) const override;
  void inverse(const Int* a, Int* out) const override;
  std::string fingerprint() const override;
  bool is_abelian() const override { return mats_.size() == 1; }

  std::size_t linear_order() const { return mats_.size(); }
  const std::vector<std::vector<Int>>& matrix(std::size_t k) const { return mats_[k]; }

 private:
  std::size_t d_;
  std::vector<std::vector<std::vector<Int>>> mats_;
  std::vector<std::vector<std::size_t>> mult_;
  std::vector<std::size_t> inv_;
};

/// Group given by an explicit multiplication table on {0, .., n-1}.
class FiniteTableGroup final : public Group {
 public:
  using Group::inverse;
  using Group::multiply;
  explicit FiniteTableGroup(const FiniteTableSpec& spec);
  std::size_t width() const override { return 1; }
  void multiply(const Int* a, const Int* b, Int* out) const override;
  void inverse(const Int* a, Int* out) const override;
  void canonicalize(Int* a) const override;
  std::string fingerprint() const override;
  std::optional<BigInt> order() const override { return BigInt(static_cast<long>(n_)); }
  bool is_abelian() const override;

  /// Table entries are relabelled so that the identity is 0.
  Int relabel(int original) const { return relabel_[static_cast<std::size_t>(original)]; }

 private:
  std::size_t n_;
  std::vector<std::vector<Int>> table_;
  std::vector<Int> inv_;
  std::vector<Int> relabel_;
  std::string digest_;
};

/// Filiform lattice Z^(d-1) semidirect Z, with x acting as a unipotent Jordan block.
/// Coordinates (v_1..v_{d-1}, t) for the element y_1^{v_1}..y_{d-1}^{v_{d-1}} x^t.
class FiliformGroup final : public Group {
 public:
  using Group::inverse;
  using Group::multiply;
  explicit FiliformGroup(int dimension);
  std::size_t width() const override { return static_cast<std::size_t>(dim_); }
  void multiply(const Int* a, const Int* b, Int* out) const override;
  void inverse(const Int* a, Int* out) const override;
  std::string fingerprint() const override;
  std::optional<int> hirsch_length() const override { return dim_; }
  std::optional<int> homogeneous_dimension() const override { return 1 + dim_ * (dim_ - 1) / 2; }
  std::optional<int> nilpotency_class() const override { return dim_ - 1; }

 private:
  // out = J^t w for the unipotent action
  void act(Int t, const Int* w, Int* out) const;
  int dim_;
};

/// Generators of a Cayley graph; ball computations always adjoin the identity.
struct GeneratingSet {
  std::vector<Element> elements;

  /// Adds the identity and missing inverses, removing duplicates; order is preserved.
  GeneratingSet symmetrized(const Group& g) const;
  bool is_symmetric(const Group& g) const;
  bool contains_identity(const Group& g) const;
};

/// The identity together with the listed generators and their inverses.
GeneratingSet standard_generators(const Group& g, const std::vector<Element>& gens);

/// Product of generators named by signed 1-based indices (-k is the inverse of generator k).
Element evaluate_word(const Group& g, const std::vector<Element>& gens, const std::vector<int>& word);

/// Standard generators of each family: unit vectors, x and y, the free generators, etc.
std::vector<Element> default_generators(const Group& g);

}  // namespace growthlab
