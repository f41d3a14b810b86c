#include "growthlab/relations.hpp"

#include <functional>

namespace growthlab {

RelationScales new_relation_scales_abelian(const AbelianGroup& g, const std::vector<Element>& s, int n_max,
                                           std::size_t cap) {
  if (n_max < 1 || n_max > 30) throw PreconditionError("n_max must lie in [1, 30]");
  RelationScales out;
  for (const auto& x : s) {
    const Element e = g.canonical(x);
    if (g.is_identity(e)) continue;
    const Element inv = g.inverse(e);
    bool seen = false;
    for (const auto& y : out.letters) seen = seen || y == e || y == inv;
    if (!seen) out.letters.push_back(e);
  }
  const std::size_t k = out.letters.size();
  const Int radius = Int{1} << n_max;

  // number of integer vectors of l1 norm <= radius in Z^k
  BigInt count = 0;
  for (std::size_t j = 0; j <= k && j <= static_cast<std::size_t>(radius); ++j)
    count += (BigInt(1) << static_cast<mp_bitcnt_t>(j)) * binomial(static_cast<long>(k), static_cast<long>(j)) *
             binomial(radius, static_cast<long>(j));
  if (count > BigInt(static_cast<unsigned long>(cap)))
    throw ResourceError("relation search over " + count.get_str() + " vectors exceeds the cap");

  // kernel vectors bucketed by the least n with norm <= 2^n
  std::vector<IntMatrix> by_scale(static_cast<std::size_t>(n_max) + 1);
  std::vector<Int> v(k, 0);
  const std::size_t w = g.width();
  std::vector<Element> partial(k + 1, Element(w, 0));
  std::function<void(std::size_t, Int)> rec = [&](std::size_t i, Int used) {
    if (i == k) {
      if (used == 0) return;
      Element e = partial[k];
      g.canonicalize(e.data());
      if (!g.is_identity(e)) return;
      int n = 0;
      while ((Int{1} << n) < used) ++n;
      IntVector row;
      for (Int c : v) row.emplace_back(static_cast<long>(c));
      by_scale[static_cast<std::size_t>(n)].push_back(std::move(row));
      return;
    }
    const Int room = radius - used;
    for (Int c = -room; c <= room; ++c) {
      v[i] = c;
      for (std::size_t t = 0; t < w; ++t)
        partial[i + 1][t] = checked_add(partial[i][t], checked_mul(c, out.letters[i][t]));
      rec(i + 1, used + (c < 0 ? -c : c));
    }
    v[i] = 0;
  };
  rec(0, 0);

  HermiteBasis lattice(IntMatrix{}, k);
  IntMatrix basis_rows;
  for (int n = 0; n <= n_max; ++n) {
    bool grew = false;
    for (auto& row : by_scale[static_cast<std::size_t>(n)]) {
      if (lattice.contains(row)) continue;
      basis_rows = lattice.rows();
      basis_rows.push_back(std::move(row));
      lattice = HermiteBasis(basis_rows, k);
      grew = true;
    }
    if (n >= 1) out.lattices.push_back(lattice);
    if (n >= 2 && grew) out.scales.push_back(n);
  }
  return out;
}

}  // namespace growthlab
