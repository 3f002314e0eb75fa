#pragma once

#include <string>

#include <json.hpp>

#include "fibcordial/constructions.hpp"
#include "fibcordial/graph.hpp"
#include "fibcordial/oracle.hpp"
#include "fibcordial/verifier.hpp"

namespace fibcordial::io {

using nlohmann::json;

json family_to_json(const FamilySpec& spec);
FamilySpec family_from_json(const json& j, const std::string& path = "$.family");

/// {"family": {...}, "vertices": [{"role","index"}...], "edges": [["role:i","role:j"]...]}
json graph_to_json(const Graph& g);
/// Throws SchemaError with a JSON-pointer path on any malformed field.
Graph graph_from_json(const json& j);

/// {"assignment": {"role:index": subscript, ...}, "pool_max": N}. Unlabeled
/// vertices are omitted.
json labeling_to_json(const Graph& g, const Labeling& l);
/// Vertices missing from "assignment" stay unlabeled (the verifier reports
/// them); names not in the graph are a schema error.
Labeling labeling_from_json(const Graph& g, const json& j);

json report_to_json(const VerificationReport& r);
json certificate_to_json(const ObstructionCertificate& c);

json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

/// Graphviz rendering: node labels "F_i", even-subscript nodes filled grey,
/// edges with induced label 1 solid and 0 dashed. Byte-stable for a given input.
std::string to_dot(const Graph& g, const Labeling& l);

}  // namespace fibcordial::io
