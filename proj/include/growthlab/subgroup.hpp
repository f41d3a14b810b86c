// Subgroups with a computable left-coset key.
#pragma once

#include <memory>
#include <string>
#include <vector>

#include "growthlab/ball.hpp"
#include "growthlab/group.hpp"

namespace growthlab {

class Subgroup {
 public:
  virtual ~Subgroup() = default;
  virtual bool contains(const Element& g) const = 0;
  /// Equal for g and g' exactly when gH = g'H.
  virtual Element coset_key(const Element& g) const = 0;
  virtual std::string describe() const = 0;
};

using SubgroupPtr = std::shared_ptr<const Subgroup>;

/// Subgroup of an abelian group spanned by integer vectors.
SubgroupPtr lattice_subgroup(const AbelianGroup& g, const IntMatrix& generators);
/// Center of a family that exposes an explicit center.
SubgroupPtr center_subgroup(const Group& g);
/// Finite subgroup generated by the given elements (closure is enumerated).
SubgroupPtr finite_subgroup(const Group& g, const std::vector<Element>& generators, std::size_t cap = 1'000'000);

/// |S^n H / H| for n = 0..radius.
std::vector<Int> coset_ball_counts(const Group& g, const GeneratingSet& s, const Subgroup& h, int radius,
                                   const BallOptions& options = {});

/// Elements of the subgroup generated by gens, for finite subgroups only.
ElementSet subgroup_closure(const Group& g, const std::vector<Element>& gens, std::size_t cap = 1'000'000);

}  // namespace growthlab
