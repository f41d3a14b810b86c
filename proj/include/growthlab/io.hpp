// JSON and CSV serialization.
#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "growthlab/ball.hpp"
#include "growthlab/free_nilpotent.hpp"
#include "growthlab/group.hpp"
#include "growthlab/growth.hpp"
#include "growthlab/progression.hpp"
#include "growthlab/topology.hpp"
#include "growthlab/witness.hpp"

namespace growthlab {

using Json = nlohmann::ordered_json;

/// A group together with the generators of a Cayley graph.
struct GroupDocument {
  GroupSpec spec;
  std::vector<Element> generators;  // empty means the family defaults
};

Json to_json(const GroupSpec& spec);
GroupSpec group_spec_from_json(const Json& j);

Json to_json(const GroupDocument& doc);
GroupDocument group_document_from_json(const Json& j);

Json to_json(const BallProfile& p);
BallProfile profile_from_json(const Json& j);
/// Columns n, beta, sigma with a header row.
std::string profile_to_csv(const BallProfile& p);
BallProfile profile_from_csv(const std::string& text);
/// Accepts either format, decided by the first non-blank character.
BallProfile parse_profile(const std::string& text);

Json to_json(const Radical& r);
Radical radical_from_json(const Json& j);
Json to_json(const PiecewiseMonomial& f);
PiecewiseMonomial piecewise_from_json(const Json& j);
Json to_json(const GrowthFit& fit);
/// Columns m, beta, model: the fitted value beta(anchor) f(m / anchor).
std::string fit_to_csv(const BallProfile& p, const GrowthFit& fit);

Json to_json(const Progression& p);
Json to_json(const UpperTriangularReport& r);
Json to_json(const WitnessReport& r);
Json to_json(const HallBasis& b);
/// Structure constants as (i, j, k, numerator, denominator) for [e_i, e_j] = sum c_k e_k, i < j.
Json to_json(const LieStructure& l);

Json to_json(const FiniteGraph& g);
/// Adjacency lists {"adjacency": [[...], ...]}.
FiniteGraph graph_from_json(const Json& j);

Json element_to_json(const Element& e);
Element element_from_json(const Json& j, std::size_t width);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);
/// Parses JSON text, turning syntax errors into ParseError.
Json parse_json(const std::string& text);

}  // namespace growthlab
