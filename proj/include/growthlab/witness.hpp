// Verifier for explicit multi-scale progression witnesses of polynomial volume.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "growthlab/progression.hpp"

namespace growthlab {

/// Upper bound for the largest finite subgroup of GL_d(Z): exact for d in {0, 1, 3, 5}, else (2d)!.
BigInt finite_linear_group_bound(int d);

/// One scale of a witness: a progression and its translate set.
struct WitnessLevel {
  Progression progression;
  std::vector<Element> translates;  // must contain the identity
  std::optional<int> homogeneous_dimension;  // defaults to that of the lattice group
};

struct FineScaleWitness {
  GroupPtr group;
  GeneratingSet generators;
  int d = 1;                       // growth hypothesis exponent
  std::vector<Int> scales;         // r_0 < r_1 < ... , one per level
  std::vector<WitnessLevel> levels;
  Int eta = 1;                     // S^m inside X_i P_i^{ceil(eta m / r_i)}
  Rational inj_constant = 4;       // inj P_i and r_{i+1}/r_i agree within this factor
  std::optional<Rational> dim_constant;   // |S^m| >= c m^{dim P_i} |S|
  std::optional<Rational> hdim_constant;  // |S^m| >= c m^{hdim P_i}
  std::optional<Rational> injz_constant;  // inj^Z P_i >= c r_{i+1}^{c_i/(c_i-1)} / r_i
  std::optional<Rational> sqrt_scale_constant;  // finite groups: P_i abelian once r_{i+1} > M diam^{1/2}
  /// Lattice maps between consecutive levels (entry i-1 maps level i-1 to level i), as integer matrices.
  std::vector<std::optional<IntMatrix>> lattice_maps;
  Int max_scale = 0;  // largest sampled m; 0 means 2 r_{d'}
  std::size_t cap = 8'000'000;
};

enum class CheckStatus { Pass, Fail, Skipped, Reported };

std::string to_string(CheckStatus s);

struct CheckResult {
  std::string id;  // "scales", "i", "ii", ..., "xvi"
  CheckStatus status = CheckStatus::Skipped;
  std::string detail;
};

struct WitnessReport {
  std::vector<CheckResult> checks;
  std::vector<Int> samples;

  bool ok() const;
  std::vector<std::string> failing() const;
  const CheckResult& at(const std::string& id) const;
};

/// Checks every conclusion decidable on the explicit data, on sampled scales
/// m in {r_i 2^k} together with the next scale, up to max_scale.
WitnessReport verify_witness(const FineScaleWitness& w);

/// Hand-built witnesses: "zxz64" for Z x Z_64 and "heisenberg-modz" for the Heisenberg group modulo z^16.
FineScaleWitness example_witness(const std::string& name);
std::vector<std::string> example_witness_names();

/// Single-field corruptions of the "zxz64" witness, each breaking exactly one conclusion:
/// "scale" (r_0 = 3), "eta" (eta = 1), "map" (doubled lattice map), "inj-constant" (factor 1),
/// "dim-constant" and "hdim-constant" (constant 10).
FineScaleWitness corrupt_witness(FineScaleWitness w, const std::string& field);
std::vector<std::string> witness_corruptions();

}  // namespace growthlab
