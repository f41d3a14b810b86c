// Progressions, upper-triangular form, injectivity radii and approximate-group diagnostics.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "growthlab/ball.hpp"
#include "growthlab/group.hpp"

namespace growthlab {

/// Projector from a lattice group onto the ambient group, and a finite symmetry subgroup.
struct Projection {
  GroupPtr lattice;
  /// Empty: lattice and ambient share coordinates (ambient is a quotient).
  /// Otherwise ambient coordinates = matrix * lattice coordinates, for an abelian lattice; the map must be
  /// a homomorphism modulo the symmetry subgroup.
  std::vector<std::vector<Int>> matrix;
  /// Elements of the symmetry subgroup H of the ambient group; empty means trivial.
  std::vector<Element> symmetry;
};

/// P(u; L) = { u_1^{l_1} .. u_d^{l_d} : |l_i| <= L_i }, optionally pulled back through a projection.
class Progression {
 public:
  static constexpr std::size_t kDefaultCap = 5'000'000;

  Progression(GroupPtr ambient, std::vector<Element> generators, std::vector<Rational> lengths,
              std::optional<Projection> projection = std::nullopt);

  const Group& ambient() const { return *ambient_; }
  GroupPtr ambient_ptr() const { return ambient_; }
  /// Group in which the generators live: the lattice when projected, else the ambient group.
  const Group& source() const { return projection_ ? *projection_->lattice : *ambient_; }
  GroupPtr source_ptr() const { return projection_ ? projection_->lattice : ambient_; }
  const std::optional<Projection>& projection() const { return projection_; }

  std::size_t dimension() const { return generators_.size(); }
  const std::vector<Element>& generators() const { return generators_; }
  const std::vector<Rational>& lengths() const { return lengths_; }
  std::vector<Int> bounds() const;

  Progression with_lengths(std::vector<Rational> lengths) const;
  Progression scaled(const Rational& factor) const;

  /// Image of a source element in the ambient group.
  Element to_ambient(const Element& x) const;
  /// Elements of the symmetry subgroup (always containing the identity).
  std::vector<Element> symmetry() const;
  /// Whether a source element lies in the kernel of the projection onto G / H.
  bool in_kernel(const Element& x) const;

  /// The progression inside its source group.
  ElementSet enumerate_source(std::size_t cap = kDefaultCap) const;
  /// The progression as a subset of the ambient group (including the symmetry subgroup).
  ElementSet enumerate(std::size_t cap = kDefaultCap) const;

 private:
  GroupPtr ambient_;
  std::vector<Element> generators_;
  std::vector<Rational> lengths_;
  std::optional<Projection> projection_;
  ElementSet symmetry_set_;
};

/// Expression of [u_i^s, u_j^t] as u_{j+1}^{l_{j+1}} .. u_d^{l_d}.
struct TailExpression {
  std::size_t i = 0, j = 0;
  int s = 1, t = 1;
  std::vector<Int> exponents;  // entries for indices j+1..d-1 (others zero), full length d
  Rational required;           // smallest C admitting this expression
};

struct UpperTriangularReport {
  bool ok = false;
  Int constant = 0;  // minimal integer C when ok
  std::vector<TailExpression> expressions;
  std::string failure;  // witness description when not ok
};

UpperTriangularReport check_upper_triangular(const Group& g, const std::vector<Element>& u,
                                             const std::vector<Rational>& lengths, Int c_max = 64,
                                             std::size_t search_cap = 4'000'000);
UpperTriangularReport check_upper_triangular(const Progression& p, Int c_max = 64);

/// Weights from recorded tail expressions.
std::vector<int> zeta_weights(std::size_t dimension, const std::vector<TailExpression>& expressions);

/// Basic commutators of the given elements with lengths L^chi.
Progression nilpotent_progression(GroupPtr g, const std::vector<Element>& x, const std::vector<Rational>& lengths,
                                  int nilpotency_class);

/// Smallest integer c <= c_max with P^n inside P(u; c n^zeta L) for all n <= n_max, if any.
std::optional<Int> dilation_constant(const Progression& p, const std::vector<int>& zeta, int n_max, Int c_max = 16);

/// P^n for n = 0..radius in the ambient group.
Ball progression_powers(const Progression& p, int radius, std::size_t cap = Progression::kDefaultCap);

/// Radius result: value, or nullopt meaning "at least j_max".
using Radius = std::optional<int>;

Radius injectivity_radius(const Progression& p, int j_max, std::size_t cap = Progression::kDefaultCap);
Radius inj_mod_center(const Progression& p, int j_max, std::size_t cap = Progression::kDefaultCap);

/// { g in G : gP = P } by brute force.
std::vector<Element> symmetry_set(const Progression& p, std::size_t cap = Progression::kDefaultCap);

struct ApproxDiagnostics {
  Rational doubling, tripling;
  std::size_t greedy_cover = 0;  // upper bound on the minimal K with A^2 inside XA
  std::vector<Element> cover;
};

ApproxDiagnostics approx_diagnostics(const Group& g, const ElementSet& a, std::size_t cap = 2'000'000);

struct IdentityReport {
  bool ok = false;
  int inverse_power = -1;   // least k with P^-1 inside P^k (or -1 if beyond d)
  int dilation_power = -1;  // least k with P(u; mL) inside P^k (or -1 if beyond 2dm)
};

IdentityReport progression_identities_check(const Progression& p, Int m, std::size_t cap = Progression::kDefaultCap);

struct FiniteSubgroupReport {
  bool precondition = false;  // K lies in P^{floor(inj/2)}
  bool contained = false;     // K lies in H
  Radius inj;
};

FiniteSubgroupReport finite_subgroup_in_power(const Progression& p, const std::vector<Element>& k, int j_max,
                                              std::size_t cap = Progression::kDefaultCap);

}  // namespace growthlab
