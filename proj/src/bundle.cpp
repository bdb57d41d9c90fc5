#include "multiwheel/bundle.hpp"

#include <chrono>
#include <cstdio>

#include "multiwheel/families.hpp"
#include "multiwheel/isomorphism.hpp"
#include "multiwheel/minors.hpp"
#include "multiwheel/serialize.hpp"

namespace mw {

const char* check_name(CheckKind kind) {
  switch (kind) {
    case CheckKind::Color: return "color";
    case CheckKind::Critical: return "critical";
    case CheckKind::Planar: return "planar";
    case CheckKind::Quad: return "quad";
    case CheckKind::Bracket: return "bracket";
  }
  return "color";
}

std::optional<CheckKind> check_from_name(const std::string& name) {
  for (CheckKind k : {CheckKind::Color, CheckKind::Critical, CheckKind::Planar,
                      CheckKind::Quad, CheckKind::Bracket}) {
    if (name == check_name(k)) return k;
  }
  return std::nullopt;
}

nlohmann::json coloring_to_json(const Coloring& coloring) {
  return nlohmann::json(coloring);
}

nlohmann::json criticality_to_json(const CriticalityReport& report) {
  nlohmann::json j;
  j["chromatic_number"] = report.chromatic_number;
  j["edge_critical"] = report.edge_critical;
  j["vertex_critical"] = report.vertex_critical;
  auto edges = nlohmann::json::array();
  for (const EdgeCheck& check : report.edge_checks) {
    nlohmann::json e;
    e["edge"] = {check.edge.u, check.edge.v};
    e["chromatic_after"] = check.chromatic_after;
    if (check.witness) e["witness"] = coloring_to_json(*check.witness);
    edges.push_back(std::move(e));
  }
  j["edge_checks"] = std::move(edges);
  auto vertices = nlohmann::json::array();
  for (const VertexCheck& check : report.vertex_checks) {
    nlohmann::json v;
    v["vertex"] = check.vertex;
    v["chromatic_after"] = check.chromatic_after;
    if (check.witness) v["witness"] = coloring_to_json(*check.witness);
    vertices.push_back(std::move(v));
  }
  j["vertex_checks"] = std::move(vertices);
  if (!report.contraction_checks.empty()) {
    auto contractions = nlohmann::json::array();
    for (const ContractionCheck& check : report.contraction_checks) {
      contractions.push_back({{"edge", {check.edge.u, check.edge.v}},
                              {"chromatic_after", check.chromatic_after}});
    }
    j["contraction_checks"] = std::move(contractions);
  }
  return j;
}

nlohmann::json embedding_to_json(const Embedding& e) {
  nlohmann::json j;
  j["graph"] = graph_to_json(e.graph);
  j["faces"] = e.faces;
  return j;
}

Embedding embedding_from_json(const nlohmann::json& j) {
  Embedding e;
  e.graph = graph_from_json(j.at("graph"));
  e.faces = j.at("faces").get<std::vector<std::vector<VertexId>>>();
  return e;
}

std::string bundle_hash(const nlohmann::json& document) {
  nlohmann::json hashed = document;
  hashed.erase("timestamp");
  hashed.erase("bundle_hash");
  const std::string text = hashed.dump();
  uint64_t h = 14695981039346656037ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[20];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return std::string("fnv1a:") + buf;
}

VerificationBundle make_bundle(const Graph& g,
                               const std::set<CheckKind>& checks,
                               const std::optional<Embedding>& embedding,
                               const std::string& spec_string) {
  VerificationBundle bundle;
  nlohmann::json& doc = bundle.document;
  doc["tool"] = {{"name", kToolName}, {"version", kToolVersion}};
  if (!spec_string.empty()) doc["spec"] = spec_string;

  const int n = g.vertex_count();
  const int m = g.edge_count();
  doc["graph"] = {{"n", n},
                  {"m", m},
                  {"two_n_minus_2", m == 2 * n - 2},
                  {"canonical_graph6", canonical_form(g).key},
                  {"value", graph_to_json(g)}};

  bool all_hold = true;
  nlohmann::json results;

  if (checks.count(CheckKind::Color) || checks.count(CheckKind::Critical)) {
    CriticalityReport report = certify_4_critical(g);
    if (!verify_report(g, report))
      throw std::logic_error("criticality report failed re-validation");
    if (checks.count(CheckKind::Color)) {
      bool holds = report.chromatic_number == 4;
      results["color"] = {{"chromatic_number", report.chromatic_number},
                          {"holds", holds}};
      all_hold = all_hold && holds;
    }
    if (checks.count(CheckKind::Critical)) {
      bool holds = report.four_critical();
      nlohmann::json j = criticality_to_json(report);
      j["holds"] = holds;
      results["critical"] = std::move(j);
      all_hold = all_hold && holds;
    }
  }

  if (checks.count(CheckKind::Planar)) {
    PlanarityResult planarity = is_planar(g);
    nlohmann::json j;
    j["planar"] = planarity.planar;
    if (planarity.embedding) {
      validate_embedding(*planarity.embedding);
      j["faces"] = planarity.embedding->faces;
    }
    if (planarity.witness) {
      if (!verify_kuratowski(g, *planarity.witness))
        throw std::logic_error("kuratowski witness failed re-validation");
      j["kuratowski"] = {{"kind", planarity.witness->k5 ? "K5" : "K33"},
                         {"branch_vertices", planarity.witness->branch_vertices},
                         {"paths", planarity.witness->paths}};
    }
    j["holds"] = planarity.planar;
    results["planar"] = std::move(j);
    all_hold = all_hold && planarity.planar;
  }

  if (checks.count(CheckKind::Quad)) {
    nlohmann::json j;
    bool holds = false;
    if (embedding) {
      holds = certify_projective_quadrangulation(*embedding);
      EmbeddingSummary summary = validate_embedding(*embedding);
      j["euler_characteristic"] = summary.euler_characteristic;
      j["faces"] = static_cast<int>(embedding->faces.size());
    } else {
      j["note"] = "no embedding supplied";
    }
    j["holds"] = holds;
    results["quad"] = std::move(j);
    all_hold = all_hold && holds;
  }

  if (checks.count(CheckKind::Bracket)) {
    const Graph o = octahedron();
    const Graph o_minus = octahedron_minus().graph;
    auto inner = has_minor(g, o_minus);
    auto outer = has_minor(g, o);
    bool holds = inner.has_value() && !outer.has_value() &&
                 has_minor(o, o_minus).has_value();
    nlohmann::json j;
    j["h1"] = "O-";
    j["h2"] = "O";
    j["h1_minor_of_host"] = inner.has_value();
    j["h2_minor_of_host"] = outer.has_value();
    if (inner) {
      if (!verify_minor_witness(g, o_minus, *inner))
        throw std::logic_error("minor witness failed re-validation");
      j["h1_witness"] = inner->branch_sets;
    }
    j["holds"] = holds;
    results["bracket"] = std::move(j);
    all_hold = all_hold && holds;
  }

  doc["checks"] = std::move(results);
  doc["timestamp"] = std::chrono::duration_cast<std::chrono::seconds>(
                         std::chrono::system_clock::now().time_since_epoch())
                         .count();
  doc["bundle_hash"] = "";
  doc["bundle_hash"] = bundle_hash(doc);
  bundle.all_requested_hold = all_hold;
  return bundle;
}

}  // namespace mw
