#include "growthlab/witness.hpp"

namespace growthlab {

namespace {

FineScaleWitness zxz64() {
  FineScaleWitness w;
  auto g = make_group(AbelianSpec{2, {{0, 64}}});
  auto plane = make_group(AbelianSpec{2, {}});
  auto line = make_group(AbelianSpec{1, {}});
  w.group = g;
  w.generators = standard_generators(*g, {{1, 0}, {0, 1}});
  w.d = 2;
  w.scales = {2, 64};
  w.eta = 4;
  w.inj_constant = 4;
  w.dim_constant = Rational(1, 4);
  w.hdim_constant = Rational(1, 4);

  Progression p0(g, {{1, 0}, {0, 1}}, {1, 1}, Projection{plane, {}, {}});
  std::vector<Element> cyclic;
  for (Int k = 0; k < 64; ++k) cyclic.push_back({0, k});
  Progression p1(g, {{1}}, {32}, Projection{line, {{1}, {0}}, cyclic});
  w.levels.push_back({p0, {g->identity()}, std::nullopt});
  w.levels.push_back({p1, {g->identity()}, std::nullopt});
  w.lattice_maps = {IntMatrix{{1, 0}}};
  return w;
}

FineScaleWitness heisenberg_modz() {
  FineScaleWitness w;
  auto g = make_group(HeisenbergSpec{HeisenbergSpec::Quotient::Center, 16});
  auto lattice = make_group(HeisenbergSpec{});
  auto plane = make_group(AbelianSpec{2, {}});
  w.group = g;
  w.generators = standard_generators(*g, {{1, 0, 0}, {0, 1, 0}});
  w.d = 3;
  w.scales = {8, 32};
  w.max_scale = 32;
  w.eta = 8;
  w.inj_constant = 4;
  w.injz_constant = Rational(1, 4);
  w.dim_constant = Rational(1, 8);
  w.hdim_constant = Rational(1, 32);

  Progression p0(g, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, {1, 1, 1}, Projection{lattice, {}, {}});
  std::vector<Element> center;
  for (Int k = 0; k < 16; ++k) center.push_back({0, 0, k});
  Progression p1(g, {{1, 0}, {0, 1}}, {8, 8}, Projection{plane, {{1, 0}, {0, 1}, {0, 0}}, center});
  w.levels.push_back({p0, {g->identity()}, std::nullopt});
  w.levels.push_back({p1, {g->identity()}, std::nullopt});
  return w;
}

}  // namespace

FineScaleWitness example_witness(const std::string& name) {
  if (name == "zxz64") return zxz64();
  if (name == "heisenberg-modz") return heisenberg_modz();
  throw ParseError("unknown witness '" + name + "'");
}

std::vector<std::string> example_witness_names() { return {"zxz64", "heisenberg-modz"}; }

std::vector<std::string> witness_corruptions() {
  return {"scale", "eta", "map", "inj-constant", "dim-constant", "hdim-constant"};
}

FineScaleWitness corrupt_witness(FineScaleWitness w, const std::string& field) {
  if (field == "scale") w.scales.front() = 3;
  else if (field == "eta") w.eta = 1;
  else if (field == "map") {
    if (w.lattice_maps.empty() || !w.lattice_maps.front()) throw PreconditionError("witness has no lattice map");
    for (auto& row : *w.lattice_maps.front())
      for (auto& x : row) x *= 2;
  } else if (field == "inj-constant") w.inj_constant = 1;
  else if (field == "dim-constant") w.dim_constant = 10;
  else if (field == "hdim-constant") w.hdim_constant = 10;
  else throw ParseError("unknown corruption '" + field + "'");
  return w;
}

}  // namespace growthlab
