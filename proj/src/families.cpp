#include "multiwheel/families.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace mw {

namespace {

// Local designated vertices of a constituent wheel (hub 0, rim 1..2q+1):
// the vertex glued onto the shared center, and the two boundary tips whose
// edges to the center annihilate (lead pairs with the previous wheel, trail
// with the next). Both lost edges are incident to the center; which kinds
// they are is exactly the section type.
struct SectionLayout {
  VertexId center;
  VertexId lead;
  VertexId trail;
};

SectionLayout section_layout(int order, SectionType type) {
  const int last_rim = 2 * order + 1;
  switch (type) {
    case SectionType::RimRim: return {1, last_rim, 2};
    case SectionType::SpikeSpike: return {0, 1, 2};
    case SectionType::SpikeRim: return {1, 0, 2};
    case SectionType::RimSpike: return {1, last_rim, 0};
  }
  throw std::logic_error("unreachable");
}

void apply_multiwheel_roles(Graph& g, VertexId center,
                            const std::vector<VertexId>& hubs) {
  std::vector<std::pair<VertexId, VertexRole>> roles;
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    roles.push_back({v, VertexRole::Rim});
  for (VertexId h : hubs)
    if (h != center) roles[h] = {h, VertexRole::SectionHub};
  roles[center] = {center, VertexRole::CentralHub};
  g = g.with_roles(roles);
}

}  // namespace

const char* section_type_name(SectionType t) {
  switch (t) {
    case SectionType::RimRim: return "rr";
    case SectionType::SpikeSpike: return "ss";
    case SectionType::SpikeRim: return "sr";
    case SectionType::RimSpike: return "rs";
  }
  return "rr";
}

int MultiwheelSpec::total_order() const {
  int q = 0;
  for (const Section& s : sections) q += s.order;
  return q;
}

void MultiwheelSpec::validate() const {
  if (sections.size() < 3)
    throw std::invalid_argument("a plane multiwheel needs at least 3 sections");
  if (sections.size() % 2 == 0)
    throw std::invalid_argument("a plane multiwheel needs an odd section count");
  for (const Section& s : sections)
    if (s.order < 1) throw std::invalid_argument("section orders must be >= 1");
}

std::string MultiwheelSpec::to_string() const {
  std::string out = "w:";
  for (std::size_t i = 0; i < sections.size(); ++i) {
    if (i) out += '-';
    out += std::to_string(sections[i].order);
    out += section_type_name(sections[i].type);
  }
  return out;
}

int ProjectiveSpec::satellite_total() const {
  int q = 0;
  for (int s : satellite_orders) q += s;
  return q;
}

void ProjectiveSpec::validate() const {
  if (central_order < 1)
    throw std::invalid_argument("central order must be >= 1");
  if (static_cast<int>(satellite_orders.size()) != 2 * central_order + 1)
    throw std::invalid_argument(
        "satellite count must be twice the central order plus one");
  for (int s : satellite_orders)
    if (s < 1) throw std::invalid_argument("satellite orders must be >= 1");
}

std::string ProjectiveSpec::to_string() const {
  std::string out = "p:c=" + std::to_string(central_order) + ";s=";
  for (std::size_t i = 0; i < satellite_orders.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(satellite_orders[i]);
  }
  return out;
}

// ----- elementary builders --------------------------------------------------

Graph cycle_graph(int k) {
  if (k < 3) throw std::invalid_argument("a cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (int i = 0; i < k; ++i) edges.emplace_back(i, (i + 1) % k);
  Graph g = Graph::from_edges(k, std::move(edges));
  for (int i = 0; i < k; ++i) g = g.with_role(i, VertexRole::Rim);
  return g;
}

Graph path_graph(int k) {
  if (k < 1) throw std::invalid_argument("a path needs at least 1 vertex");
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < k; ++i) edges.emplace_back(i, i + 1);
  return Graph::from_edges(k, std::move(edges));
}

Graph complete_graph(int k) {
  std::vector<Edge> edges;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) edges.emplace_back(i, j);
  return Graph::from_edges(k, std::move(edges));
}

Graph complete_bipartite(int a, int b) {
  std::vector<Edge> edges;
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) edges.emplace_back(i, a + j);
  return Graph::from_edges(a + b, std::move(edges));
}

Graph wheel(int k) {
  if (k < 3) throw std::invalid_argument("a wheel needs a rim of at least 3");
  std::vector<Edge> edges;
  for (int i = 1; i <= k; ++i) {
    edges.emplace_back(0, i);
    edges.emplace_back(i, i % k + 1);
  }
  Graph g = Graph::from_edges(k + 1, std::move(edges));
  g = g.with_role(0, VertexRole::CentralHub);
  for (int i = 1; i <= k; ++i) g = g.with_role(i, VertexRole::Rim);
  return g;
}

Graph octahedron() {
  std::vector<Edge> edges;
  for (int i = 0; i < 6; ++i) {
    for (int j = i + 1; j < 6; ++j) {
      if (i / 2 == j / 2) continue;  // antipodal pairs (0,1) (2,3) (4,5)
      edges.emplace_back(i, j);
    }
  }
  return Graph::from_edges(6, std::move(edges));
}

OctahedronMinus octahedron_minus() {
  const Edge missing(0, 2);
  return {delete_edge(octahedron(), missing), missing};
}

// ----- plane multiwheels ----------------------------------------------------

BuiltMultiwheel plane_multiwheel(const MultiwheelSpec& spec) {
  spec.validate();
  const int k = static_cast<int>(spec.sections.size());

  SumConfiguration config;
  std::vector<SectionLayout> layouts;
  for (const Section& s : spec.sections) {
    config.constituents.push_back(wheel(2 * s.order + 1));
    layouts.push_back(section_layout(s.order, s.type));
  }

  // wheel 0 is laid down as-is; its local ids are final ids
  const VertexId center = layouts[0].center;
  const VertexId first_lead = layouts[0].lead;
  VertexId prev_trail = layouts[0].trail;
  int next_fresh = config.constituents[0].vertex_count();

  for (int i = 1; i < k; ++i) {
    IdentificationMap glue;
    glue.entries.push_back({layouts[i].center, center});
    glue.entries.push_back({layouts[i].lead, prev_trail});
    if (i == k - 1) glue.entries.push_back({layouts[i].trail, first_lead});

    // track where this wheel's trail tip lands
    std::vector<char> mapped(config.constituents[i].vertex_count(), 0);
    for (auto [from, to] : glue.entries) mapped[from] = 1;
    VertexId trail_final = -1;
    int fresh = next_fresh;
    for (VertexId v = 0; v < config.constituents[i].vertex_count(); ++v) {
      if (mapped[v]) continue;
      if (v == layouts[i].trail) trail_final = fresh;
      ++fresh;
    }
    if (i == k - 1) trail_final = first_lead;
    next_fresh = fresh;
    prev_trail = trail_final;
    config.glue.push_back(std::move(glue));
  }

  SumReplay rep = replay(config);
  const int q_total = spec.total_order();
  if (rep.graph.vertex_count() != 2 * q_total + 1)
    throw certificate_error("multiwheel-vertex-count",
                            spec.to_string() + " produced n = " +
                                std::to_string(rep.graph.vertex_count()) +
                                ", expected " + std::to_string(2 * q_total + 1));
  if (rep.graph.edge_count() != 4 * q_total)
    throw certificate_error("multiwheel-edge-count",
                            spec.to_string() + " produced m = " +
                                std::to_string(rep.graph.edge_count()) +
                                ", expected " + std::to_string(4 * q_total));
  for (int i = 0; i < k; ++i) {
    if (rep.constituent_losses[i] != 2)
      throw certificate_error(
          "two-edge-loss", spec.to_string() + " wheel " + std::to_string(i) +
                               " lost " +
                               std::to_string(rep.constituent_losses[i]) +
                               " edges, expected 2");
  }
  if (!is_planar(rep.graph).planar)
    throw certificate_error("multiwheel-planarity",
                            spec.to_string() + " summed to a non-planar graph");

  std::vector<VertexId> hubs;
  for (int i = 0; i < k; ++i) hubs.push_back(rep.vertex_images[i][0]);
  apply_multiwheel_roles(rep.graph, rep.vertex_images[0][layouts[0].center],
                         hubs);
  return {rep.graph, std::move(config)};
}

BaseGraph base_graph() {
  MultiwheelSpec spec{{{1, SectionType::RimRim},
                       {1, SectionType::RimRim},
                       {1, SectionType::RimRim}}};
  BuiltMultiwheel built = plane_multiwheel(spec);
  SumReplay rep = replay(built.configuration);

  BaseGraph base;
  base.graph = built.graph;
  base.configuration = std::move(built.configuration);
  const VertexId center = rep.vertex_images[0][1];
  base.contraction_edge = Edge(center, rep.vertex_images[0][0]);
  for (int i = 0; i < 3; ++i) {
    // hub to its trail-side rim tip: a degree-3 / degree-4 pair
    base.hub_rim_edges[i] =
        Edge(rep.vertex_images[i][0], rep.vertex_images[i][2]);
  }
  return base;
}

// ----- Mycielski construction and the Grotzsch class ------------------------

Graph mycielski(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<Edge> edges = g.edges();
  for (const Edge& e : g.edges()) {
    edges.emplace_back(e.u, n + e.v);
    edges.emplace_back(e.v, n + e.u);
  }
  const VertexId apex = 2 * n;
  for (int v = 0; v < n; ++v) edges.emplace_back(n + v, apex);
  Graph m = Graph::from_edges(2 * n + 1, std::move(edges));
  for (int v = 0; v < n; ++v) {
    if (g.role(v) != VertexRole::Plain) m = m.with_role(v, g.role(v));
    m = m.with_role(n + v, VertexRole::Shadow);
  }
  return m.with_role(apex, VertexRole::Apex);
}

GrotzschClassGraph grotzsch_class(int q) {
  if (q < 1) throw std::invalid_argument("grotzsch class needs q >= 1");
  const int k = 2 * q + 1;
  GrotzschClassGraph result;
  result.graph = mycielski(cycle_graph(k));
  const auto v = [&](int i) { return (i % k + k) % k; };
  const auto u = [&](int i) { return k + (i % k + k) % k; };
  const VertexId apex = 2 * k;
  result.embedding.graph = result.graph;
  for (int i = 0; i < k; ++i)
    result.embedding.faces.push_back({v(i - 1), v(i), v(i + 1), u(i)});
  for (int i = 0; i < k; ++i)
    result.embedding.faces.push_back({apex, u(i), v(i + 1), u(i + 2)});
  if (!certify_projective_quadrangulation(result.embedding))
    throw std::logic_error("grotzsch class face list failed its certificate");
  return result;
}

// ----- projective multiwheels -----------------------------------------------

BuiltMultiwheel projective_multiwheel(const ProjectiveSpec& spec) {
  spec.validate();
  const int k = 2 * spec.central_order + 1;

  SumConfiguration config;
  config.constituents.push_back(wheel(k));  // hub 0, rim u_i = i+1
  for (int s : spec.satellite_orders)
    config.constituents.push_back(wheel(2 * s + 1));

  // satellite locals: middle tip R1 = 1, outer tip R0 = 2, rim tail R2 = last
  const auto central_rim = [&](int i) { return (i % k + k) % k + 1; };
  std::vector<VertexId> outer_final(k, -1);  // final id of satellite i's R0
  VertexId first_tail_final = -1;            // final id of satellite 0's R2
  int next_fresh = k + 1;

  for (int i = 0; i < k; ++i) {
    const Graph& sat = config.constituents[i + 1];
    const VertexId last_rim = sat.vertex_count() - 1;  // local 2q_i+1
    IdentificationMap glue;
    glue.entries.push_back({0, central_rim(i + 1)});  // hub onto u_{i+1}
    glue.entries.push_back({1, central_rim(i)});      // middle tip onto u_i
    if (i >= 1) glue.entries.push_back({last_rim, outer_final[i - 1]});
    if (i == k - 1) glue.entries.push_back({2, first_tail_final});

    std::vector<char> mapped(sat.vertex_count(), 0);
    for (auto [from, to] : glue.entries) mapped[from] = 1;
    int fresh = next_fresh;
    for (VertexId v = 0; v < sat.vertex_count(); ++v) {
      if (mapped[v]) continue;
      if (v == 2) outer_final[i] = fresh;
      if (i == 0 && v == last_rim) first_tail_final = fresh;
      ++fresh;
    }
    next_fresh = fresh;
    config.glue.push_back(std::move(glue));
  }

  SumReplay rep = replay(config);
  const int n = rep.graph.vertex_count();
  const int m = rep.graph.edge_count();
  if (n != 2 * spec.satellite_total() + 1 || m != 2 * n - 2)
    throw certificate_error(
        "projective-edge-count",
        spec.to_string() + " produced n = " + std::to_string(n) +
            ", m = " + std::to_string(m) + ", expected m = 2n-2 with n = " +
            std::to_string(2 * spec.satellite_total() + 1));
  if (rep.constituent_losses[0] != k)
    throw certificate_error(
        "central-loss", spec.to_string() + " central wheel lost " +
                            std::to_string(rep.constituent_losses[0]) +
                            " edges, expected " + std::to_string(k));
  for (int i = 1; i <= k; ++i) {
    if (rep.constituent_losses[i] != 3)
      throw certificate_error(
          "three-edge-loss",
          spec.to_string() + " satellite " + std::to_string(i - 1) + " lost " +
              std::to_string(rep.constituent_losses[i]) +
              " edges, expected 3");
  }

  std::vector<std::pair<VertexId, VertexRole>> roles;
  for (VertexId v = 0; v < n; ++v) roles.push_back({v, VertexRole::Rim});
  for (int i = 1; i <= k; ++i)
    roles[central_rim(i)] = {central_rim(i), VertexRole::SectionHub};
  roles[0] = {0, VertexRole::CentralHub};
  rep.graph = rep.graph.with_roles(roles);
  return {rep.graph, std::move(config)};
}

// ----- negative constructions ----------------------------------------------

Graph unclosed_sequence(const std::vector<int>& orders) {
  if (orders.empty())
    throw std::invalid_argument("unclosed sequence needs at least one wheel");
  for (int q : orders)
    if (q < 1) throw std::invalid_argument("wheel orders must be >= 1");

  SumConfiguration config;
  for (int q : orders) config.constituents.push_back(wheel(2 * q + 1));

  // Each junction identifies the forward spike (hub, rim 3) of one wheel
  // with the backward rim edge (1,2) of the next. Rim-to-rim junctions do
  // not stay 3-chromatic: the two rim paths of an odd wheel have opposite
  // parities, so a middle wheel cannot color both shared pairs
  // monochromatically. With a spike on one side both pairs can repeat the
  // hub color and the whole chain 3-colors.
  std::pair<VertexId, VertexId> prev_spike = {0, 3};
  int next_fresh = config.constituents[0].vertex_count();

  for (std::size_t i = 1; i < orders.size(); ++i) {
    IdentificationMap glue;
    glue.entries.push_back({1, prev_spike.second});
    glue.entries.push_back({2, prev_spike.first});

    std::vector<char> mapped(config.constituents[i].vertex_count(), 0);
    for (auto [from, to] : glue.entries) mapped[from] = 1;
    int fresh = next_fresh;
    std::pair<VertexId, VertexId> spike_final = {-1, -1};
    for (VertexId v = 0; v < config.constituents[i].vertex_count(); ++v) {
      if (mapped[v]) continue;
      if (v == 0) spike_final.first = fresh;
      if (v == 3) spike_final.second = fresh;
      ++fresh;
    }
    next_fresh = fresh;
    prev_spike = spike_final;
    config.glue.push_back(std::move(glue));
  }

  SumReplay rep = replay(config);
  if (rep.annihilated_pairs != static_cast<int>(orders.size()) - 1)
    throw certificate_error("chain-annihilation",
                            "unclosed sequence must annihilate exactly one "
                            "edge per junction");
  return rep.graph;
}

BuiltMultiwheel nonplanar_counterexample() {
  SumConfiguration config;
  config.constituents.push_back(wheel(3));  // rr section, center local 1
  config.constituents.push_back(wheel(3));  // rr section
  config.constituents.push_back(wheel(5));  // hub at center, split spikes

  {
    IdentificationMap glue;  // second triangle wheel, regular rr gluing
    glue.entries.push_back({1, 1});  // center
    glue.entries.push_back({3, 2});  // lead tip onto first wheel's trail
    config.glue.push_back(std::move(glue));
  }
  {
    // the five-wheel keeps the shared center as its hub and loses the spikes
    // to rim vertices 1 and 3, which are not adjacent on its rim
    IdentificationMap glue;
    glue.entries.push_back({0, 1});  // hub onto the center
    glue.entries.push_back({1, 5});  // first tip onto second wheel's trail
    glue.entries.push_back({3, 3});  // second tip onto first wheel's lead
    config.glue.push_back(std::move(glue));
  }

  SumReplay rep = replay(config);
  for (int i = 0; i < 3; ++i) {
    if (rep.constituent_losses[i] != 2)
      throw certificate_error("two-edge-loss",
                              "counterexample wheel " + std::to_string(i) +
                                  " lost " +
                                  std::to_string(rep.constituent_losses[i]) +
                                  " edges, expected 2");
  }
  if (is_planar(rep.graph).planar)
    throw certificate_error("counterexample-planarity",
                            "the split-spike sum must be non-planar");

  std::vector<VertexId> hubs = {rep.vertex_images[0][0],
                                rep.vertex_images[1][0],
                                rep.vertex_images[2][0]};
  apply_multiwheel_roles(rep.graph, 1, hubs);
  return {rep.graph, std::move(config)};
}

// ----- spec strings ----------------------------------------------------------

namespace {

int parse_int(const std::string& text, std::size_t& pos) {
  std::size_t start = pos;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
    ++pos;
  if (pos == start)
    throw std::invalid_argument("spec parse error at position " +
                                std::to_string(start) + ": expected a number");
  return std::stoi(text.substr(start, pos - start));
}

SectionType parse_section_type(const std::string& text, std::size_t& pos) {
  if (pos + 2 > text.size())
    throw std::invalid_argument("spec parse error at position " +
                                std::to_string(pos) +
                                ": expected a section type");
  const std::string tag = text.substr(pos, 2);
  pos += 2;
  for (SectionType t : {SectionType::RimRim, SectionType::SpikeSpike,
                        SectionType::SpikeRim, SectionType::RimSpike}) {
    if (tag == section_type_name(t)) return t;
  }
  throw std::invalid_argument("spec parse error at position " +
                              std::to_string(pos - 2) +
                              ": unknown section type '" + tag + "'");
}

void expect(const std::string& text, std::size_t& pos, const std::string& lit) {
  if (text.compare(pos, lit.size(), lit) != 0)
    throw std::invalid_argument("spec parse error at position " +
                                std::to_string(pos) + ": expected '" + lit +
                                "'");
  pos += lit.size();
}

}  // namespace

FamilySpec parse_family_spec(const std::string& text) {
  std::size_t pos = 0;
  if (text.rfind("w:", 0) == 0) {
    pos = 2;
    MultiwheelSpec spec;
    for (;;) {
      Section s;
      s.order = parse_int(text, pos);
      s.type = parse_section_type(text, pos);
      spec.sections.push_back(s);
      if (pos == text.size()) break;
      expect(text, pos, "-");
    }
    spec.validate();
    return spec;
  }
  if (text.rfind("g:", 0) == 0) {
    pos = 2;
    expect(text, pos, "q=");
    int q = parse_int(text, pos);
    if (pos != text.size())
      throw std::invalid_argument("spec parse error at position " +
                                  std::to_string(pos) + ": trailing input");
    if (q < 1) throw std::invalid_argument("grotzsch class needs q >= 1");
    return q;
  }
  if (text.rfind("p:", 0) == 0) {
    pos = 2;
    ProjectiveSpec spec;
    expect(text, pos, "c=");
    spec.central_order = parse_int(text, pos);
    expect(text, pos, ";s=");
    for (;;) {
      spec.satellite_orders.push_back(parse_int(text, pos));
      if (pos == text.size()) break;
      expect(text, pos, ",");
    }
    spec.validate();
    return spec;
  }
  throw std::invalid_argument(
      "spec parse error at position 0: expected w:, g: or p:");
}

std::string family_spec_to_string(const FamilySpec& spec) {
  if (const auto* w = std::get_if<MultiwheelSpec>(&spec)) return w->to_string();
  if (const auto* q = std::get_if<int>(&spec))
    return "g:q=" + std::to_string(*q);
  return std::get<ProjectiveSpec>(spec).to_string();
}

}  // namespace mw
