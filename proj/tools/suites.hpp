// Property suites driven by `growth-lab verify` and the acceptance tests.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "growthlab/witness.hpp"

namespace growthlab::suites {

struct SuiteReport {
  std::string name;
  std::vector<CheckResult> checks;

  bool ok() const;
  std::size_t failures() const;
};

/// Registered suite names, "all" excluded.
std::vector<std::string> suite_names();

/// Runs one suite, or every suite for "all"; throws ParseError for unknown names.
std::vector<SuiteReport> run_suite(const std::string& name, std::uint64_t seed = 0);

SuiteReport sphere_bounds();
SuiteReport proper_center();
SuiteReport relation_scales();
SuiteReport catalog_facts();
SuiteReport lemmas(std::uint64_t seed);
SuiteReport identities();
SuiteReport local_hom();
SuiteReport h1();
SuiteReport homotopy(std::uint64_t seed);
SuiteReport witness();
SuiteReport truncated();

/// Parameters of the proper-center suite: Heisenberg quotients with lengths (L, L, L^2) and m = L.
struct ProperCenterCase {
  std::string quotient;  // "center" or "xz"
  Int modulus = 0;
  Int length = 1;
};

std::vector<ProperCenterCase> proper_center_cases();
/// Smallest injectivity radius at which the suite asserts inj^Z >= m.
constexpr int kProperCenterThreshold = 1;

}  // namespace growthlab::suites
