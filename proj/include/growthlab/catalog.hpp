// Named example groups with expected facts.
#pragma once

#include <string>
#include <vector>

#include "growthlab/group.hpp"
#include "growthlab/progression.hpp"
#include "growthlab/witness.hpp"

namespace growthlab {

/// How an expected fact was obtained.
enum class FactSource {
  Closed,      // closed-form consequence of the definition
  Computed,    // value frozen from an independent computation
  Literature,  // stated in the literature on polynomial growth
};

std::string to_string(FactSource s);

struct CatalogFact {
  enum class Kind {
    Profile,         // values = beta(0..radius)
    Order,           // values = {|G|}, empty when infinite
    GrowthDegree,    // values = {homogeneous dimension}
    FitDegrees,      // values = local degrees of the fitted model at (radius, anchor)
    RelationScales,  // values = new-relation scales up to n_max = radius
  };
  Kind kind = Kind::Profile;
  std::vector<Int> values;
  int radius = 0;
  int anchor = 1;
  FactSource source = FactSource::Closed;
  std::string note;
};

std::string to_string(CatalogFact::Kind k);

struct CatalogEntry {
  std::string name;
  GroupSpec spec;
  std::vector<Element> generators;  // before symmetrization
  std::vector<CatalogFact> facts;
};

/// Parses z, z^d, zmod:m, zxzmod:m, prod:m1,m2,.., heisenberg, heisenberg-modz:m, heisenberg-modxz:m,
/// filiform:d, free:r,c, semidirect:pm and semidirect:d4; throws ParseError on unknown names.
CatalogEntry catalog_entry(const std::string& name);

/// The instances listed by default.
std::vector<std::string> catalog_names();

GeneratingSet catalog_generators(const CatalogEntry& e, const Group& g);

struct NamedProgression {
  std::string name;
  Progression progression;
};

/// Small progressions in catalog groups, used by the identity and growth suites.
std::vector<NamedProgression> catalog_progressions();

/// Recomputes one expected fact.
CheckResult verify_fact(const CatalogEntry& e, const CatalogFact& f, std::size_t cap = 20'000'000);

}  // namespace growthlab
