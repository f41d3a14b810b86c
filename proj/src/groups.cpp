#include <type_traits>

#include "growthlab/free_nilpotent.hpp"
#include "growthlab/group.hpp"

namespace growthlab {

GroupPtr make_group(const GroupSpec& spec) {
  return std::visit(
      [](const auto& s) -> GroupPtr {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, AbelianSpec>) {
          return std::make_shared<AbelianGroup>(s);
        } else if constexpr (std::is_same_v<T, FreeNilpotentSpec>) {
          return std::make_shared<FreeNilpotentGroup>(s.rank, s.nilpotency_class);
        } else if constexpr (std::is_same_v<T, HeisenbergSpec>) {
          return std::make_shared<HeisenbergGroup>(s);
        } else if constexpr (std::is_same_v<T, SemidirectSpec>) {
          return std::make_shared<SemidirectGroup>(s);
        } else if constexpr (std::is_same_v<T, FiniteTableSpec>) {
          return std::make_shared<FiniteTableGroup>(s);
        } else {
          return std::make_shared<FiliformGroup>(s.dimension);
        }
      },
      spec);
}

std::vector<Element> default_generators(const Group& g) {
  std::vector<Element> out;
  auto unit = [&](std::size_t i) {
    Element e(g.width(), 0);
    e[i] = 1;
    return e;
  };
  if (auto* f = dynamic_cast<const FreeNilpotentGroup*>(&g)) {
    for (int i = 0; i < f->basis().rank(); ++i) out.push_back(f->generator(i));
  } else if (dynamic_cast<const HeisenbergGroup*>(&g)) {
    out = {unit(0), unit(1)};
  } else if (auto* s = dynamic_cast<const SemidirectGroup*>(&g)) {
    for (std::size_t i = 0; i + 1 < g.width(); ++i) out.push_back(unit(i));
    for (std::size_t k = 1; k < s->linear_order(); ++k) {
      Element e(g.width(), 0);
      e.back() = static_cast<Int>(k);
      out.push_back(e);
    }
  } else if (auto* t = dynamic_cast<const FiniteTableGroup*>(&g)) {
    for (Int k = 1; k < static_cast<Int>(t->order()->get_si()); ++k) out.push_back(Element{k});
  } else if (dynamic_cast<const FiliformGroup*>(&g)) {
    out = {unit(0), unit(g.width() - 1)};
  } else {
    for (std::size_t i = 0; i < g.width(); ++i) {
      Element e = g.canonical(unit(i));
      if (!g.is_identity(e)) out.push_back(e);
    }
  }
  return out;
}

}  // namespace growthlab
