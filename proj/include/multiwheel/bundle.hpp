#pragma once

#include <optional>
#include <set>
#include <string>

#include "json.hpp"
#include "multiwheel/coloring.hpp"
#include "multiwheel/graph.hpp"
#include "multiwheel/planarity.hpp"

namespace mw {

inline constexpr const char* kToolName = "multiwheel";
inline constexpr const char* kToolVersion = "0.1.0";

enum class CheckKind { Color, Critical, Planar, Quad, Bracket };

const char* check_name(CheckKind kind);
std::optional<CheckKind> check_from_name(const std::string& name);

// Certificate bundle for one graph. Claims per check:
//   color    chromatic number is exactly 4
//   critical the graph is 4-critical (edge- and vertex-critical)
//   planar   the graph is planar
//   quad     the supplied embedding quadrangulates the projective plane
//   bracket  <octahedron-minus, octahedron> brackets the graph
// Every sub-certificate is re-validated before it is written. The bundle
// hash covers everything except the timestamp field.
struct VerificationBundle {
  nlohmann::json document;
  bool all_requested_hold = false;
};

VerificationBundle make_bundle(const Graph& g,
                               const std::set<CheckKind>& checks,
                               const std::optional<Embedding>& embedding,
                               const std::string& spec_string);

// FNV-1a over the serialized document with the volatile fields removed.
std::string bundle_hash(const nlohmann::json& document);

nlohmann::json coloring_to_json(const Coloring& coloring);
nlohmann::json criticality_to_json(const CriticalityReport& report);
nlohmann::json embedding_to_json(const Embedding& e);
Embedding embedding_from_json(const nlohmann::json& j);

}  // namespace mw
