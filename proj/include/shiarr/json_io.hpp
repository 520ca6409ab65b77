#pragma once

// JSON forms used by the CLI and the test fixtures. Value sequences are
// arrays of integers; graphs are sorted arrays of 2-element arrays;
// witnesses are arrays of "p/q" strings. nlohmann::json keeps object keys
// sorted, so dumps are byte-deterministic.

#include <json.hpp>

#include "shiarr/arrangement.hpp"
#include "shiarr/diagram.hpp"
#include "shiarr/pf.hpp"

namespace shiarr {

nlohmann::json graph_to_json(const SimpleGraph& g);
SimpleGraph graph_from_json(const nlohmann::json& j, int n);

nlohmann::json diagram_to_json(const Diagram& d);
Diagram diagram_from_json(const nlohmann::json& j);

nlohmann::json kdiagram_to_json(const KDiagram& d);
KDiagram kdiagram_from_json(const nlohmann::json& j);

nlohmann::json arrangement_to_json(const Arrangement& a);
Arrangement arrangement_from_json(const nlohmann::json& j);

nlohmann::json region_to_json(const Region& r);
Region region_from_json(const nlohmann::json& j);

nlohmann::json face_to_json(const Face& f);

std::vector<int> int_sequence_from_json(const nlohmann::json& j);

}  // namespace shiarr
