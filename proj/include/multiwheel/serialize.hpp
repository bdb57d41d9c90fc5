#pragma once

#include <string>

#include "json.hpp"
#include "multiwheel/graph.hpp"

namespace mw {

// graph6: bit-exact per the published format. Supports n <= 258047.
std::string to_graph6(const Graph& g);
Graph from_graph6(const std::string& text);

// {"vertices":[0..n-1], "edges":[[u,v],...], "labels":{"v":"role",...}}
// The labels object is omitted when every vertex is plain.
nlohmann::json graph_to_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& j);

// DOT, vertices filled by role; ghost edges (annihilated in a sum) dashed.
std::string to_dot(const Graph& g, const std::vector<Edge>& ghost_edges = {});

}  // namespace mw
