#pragma once

#include <json.hpp>

#include "qirw/instances.hpp"

namespace qirw {

using nlohmann::json;

// Document formats. Parse failures throw InputError carrying the parser's
// line/column diagnostics.

json graph_to_json(const Graph& g);
GraphPtr graph_from_json(const json& j);

json weighting_to_json(const EdgeWeighting& w);
EdgeWeighting weighting_from_json(GraphPtr host, const json& j);

json decomposition_to_json(const PathDecomposition& d);
PathDecomposition decomposition_from_json(GraphPtr host, const json& j);

json vertex_map_to_json(const VertexMap& m);
VertexMap vertex_map_from_json(GraphPtr source, GraphPtr target, const json& j);

json instance_to_json(const Instance& inst);
Instance instance_from_json(const json& j);

json report_to_json(const SynthesisReport& r);
SynthesisReport report_from_json(GraphPtr target, const json& j);

json certification_to_json(const CertificationResult& r);

std::string weighting_to_dot(const EdgeWeighting& w);

json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const json& j);

} // namespace qirw
