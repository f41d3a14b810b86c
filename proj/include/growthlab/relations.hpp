// Scales at which new relations appear, for abelian groups.
#pragma once

#include <vector>

#include "growthlab/group.hpp"
#include "growthlab/linalg.hpp"

namespace growthlab {

struct RelationScales {
  std::vector<int> scales;               // n >= 2 with a strictly larger relation lattice than at n - 1
  std::vector<HermiteBasis> lattices;    // relation lattice spanned at each n = 1..n_max (index n - 1)
  std::vector<Element> letters;          // non-identity generators, one per inverse pair
};

/// Relation lattices of an abelian group on the letters of S. A relation of length at most 2^n is an
/// integer vector of l1 norm at most 2^n in the kernel of Z^letters -> G; commutators of letters are
/// relations of length 4, so from n = 2 on the normal closure is determined by this lattice.
RelationScales new_relation_scales_abelian(const AbelianGroup& g, const std::vector<Element>& s, int n_max,
                                           std::size_t cap = 50'000'000);

}  // namespace growthlab
