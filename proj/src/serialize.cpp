#include "multiwheel/serialize.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace mw {

namespace {

void append_bits(std::string& out, int& bit, char& cur, bool value) {
  cur = static_cast<char>(cur << 1 | (value ? 1 : 0));
  if (++bit == 6) {
    out.push_back(static_cast<char>(cur + 63));
    bit = 0;
    cur = 0;
  }
}

}  // namespace

std::string to_graph6(const Graph& g) {
  const int n = g.vertex_count();
  if (n > 258047) throw std::invalid_argument("graph too large for graph6");
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back('~');
    out.push_back(static_cast<char>((n >> 12 & 63) + 63));
    out.push_back(static_cast<char>((n >> 6 & 63) + 63));
    out.push_back(static_cast<char>((n & 63) + 63));
  }
  int bit = 0;
  char cur = 0;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u) append_bits(out, bit, cur, g.has_edge(u, v));
  if (bit > 0) {
    cur = static_cast<char>(cur << (6 - bit));
    out.push_back(static_cast<char>(cur + 63));
  }
  return out;
}

Graph from_graph6(const std::string& text) {
  std::size_t pos = 0;
  auto need = [&](std::size_t k) {
    if (pos + k > text.size())
      throw std::invalid_argument("truncated graph6 string");
  };
  need(1);
  int n;
  if (text[pos] == '~') {
    ++pos;
    need(3);
    n = 0;
    for (int i = 0; i < 3; ++i) {
      int c = static_cast<unsigned char>(text[pos++]) - 63;
      if (c < 0 || c > 63) throw std::invalid_argument("bad graph6 byte");
      n = n << 6 | c;
    }
  } else {
    n = static_cast<unsigned char>(text[pos++]) - 63;
    if (n < 0 || n > 62) throw std::invalid_argument("bad graph6 size byte");
  }
  const long bits_needed = static_cast<long>(n) * (n - 1) / 2;
  const long bytes_needed = (bits_needed + 5) / 6;
  need(static_cast<std::size_t>(bytes_needed));
  if (pos + static_cast<std::size_t>(bytes_needed) != text.size())
    throw std::invalid_argument("trailing bytes in graph6 string");

  std::vector<Edge> edges;
  long bit_index = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u, ++bit_index) {
      int c = static_cast<unsigned char>(text[pos + bit_index / 6]) - 63;
      if (c < 0 || c > 63) throw std::invalid_argument("bad graph6 byte");
      if (c >> (5 - bit_index % 6) & 1) edges.emplace_back(u, v);
    }
  }
  return Graph::from_edges(n, std::move(edges));
}

nlohmann::json graph_to_json(const Graph& g) {
  nlohmann::json j;
  std::vector<int> vertices(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) vertices[v] = v;
  j["vertices"] = vertices;
  auto edges = nlohmann::json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
  j["edges"] = edges;
  nlohmann::json labels = nlohmann::json::object();
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (g.role(v) != VertexRole::Plain)
      labels[std::to_string(v)] = role_name(g.role(v));
  }
  if (!labels.empty()) j["labels"] = labels;
  return j;
}

Graph graph_from_json(const nlohmann::json& j) {
  if (!j.contains("vertices") || !j.contains("edges"))
    throw std::invalid_argument("graph json needs vertices and edges");
  std::vector<int> vertices = j.at("vertices").get<std::vector<int>>();
  const int n = static_cast<int>(vertices.size());
  std::vector<char> seen(n, 0);
  for (int v : vertices) {
    if (v < 0 || v >= n || seen[v])
      throw std::invalid_argument("graph json vertices must be 0..n-1");
    seen[v] = 1;
  }
  std::vector<Edge> edges;
  for (const auto& pair : j.at("edges")) {
    if (!pair.is_array() || pair.size() != 2)
      throw std::invalid_argument("graph json edge must be a pair");
    edges.emplace_back(pair[0].get<int>(), pair[1].get<int>());
  }
  Graph g = Graph::from_edges(n, std::move(edges));
  if (j.contains("labels")) {
    for (auto it = j.at("labels").begin(); it != j.at("labels").end(); ++it) {
      auto role = role_from_name(it.value().get<std::string>());
      if (!role) throw std::invalid_argument("unknown vertex role in graph json");
      g = g.with_role(std::stoi(it.key()), *role);
    }
  }
  return g;
}

std::string to_dot(const Graph& g, const std::vector<Edge>& ghost_edges) {
  static const std::map<VertexRole, std::string> fill = {
      {VertexRole::CentralHub, "gold"},    {VertexRole::SectionHub, "orange"},
      {VertexRole::Rim, "lightblue"},      {VertexRole::Shadow, "gray80"},
      {VertexRole::Apex, "plum"},          {VertexRole::Plain, "white"},
  };
  std::ostringstream out;
  out << "graph G {\n  node [style=filled];\n";
  for (int v = 0; v < g.vertex_count(); ++v) {
    out << "  " << v << " [fillcolor=\"" << fill.at(g.role(v)) << "\"];\n";
  }
  for (const Edge& e : g.edges()) out << "  " << e.u << " -- " << e.v << ";\n";
  for (const Edge& e : ghost_edges)
    out << "  " << e.u << " -- " << e.v << " [style=dashed];\n";
  out << "}\n";
  return out.str();
}

}  // namespace mw
