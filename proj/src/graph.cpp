#include "multiwheel/graph.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace mw {

const char* role_name(VertexRole role) {
  switch (role) {
    case VertexRole::Plain: return "plain";
    case VertexRole::CentralHub: return "central-hub";
    case VertexRole::SectionHub: return "section-hub";
    case VertexRole::Rim: return "rim";
    case VertexRole::Shadow: return "shadow";
    case VertexRole::Apex: return "apex";
  }
  return "plain";
}

std::optional<VertexRole> role_from_name(const std::string& name) {
  for (VertexRole r : {VertexRole::Plain, VertexRole::CentralHub,
                       VertexRole::SectionHub, VertexRole::Rim,
                       VertexRole::Shadow, VertexRole::Apex}) {
    if (name == role_name(r)) return r;
  }
  return std::nullopt;
}

Edge::Edge(VertexId a, VertexId b) {
  if (a == b) throw std::invalid_argument("edge endpoints must be distinct");
  u = std::min(a, b);
  v = std::max(a, b);
}

Graph Graph::from_edges(int vertex_count, std::vector<Edge> edges) {
  if (vertex_count < 0) throw std::invalid_argument("negative vertex count");
  for (const Edge& e : edges) {
    if (e.u < 0 || e.v >= vertex_count)
      throw std::invalid_argument("edge endpoint outside vertex set");
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

  Graph g;
  g.n_ = vertex_count;
  g.edges_ = std::move(edges);
  g.adj_.assign(vertex_count, {});
  for (const Edge& e : g.edges_) {
    g.adj_[e.u].push_back(e.v);
    g.adj_[e.v].push_back(e.u);
  }
  for (auto& nb : g.adj_) std::sort(nb.begin(), nb.end());
  g.roles_.assign(vertex_count, VertexRole::Plain);
  return g;
}

const std::vector<VertexId>& Graph::neighbors(VertexId v) const {
  if (!has_vertex(v)) throw std::invalid_argument("no such vertex");
  return adj_[v];
}

int Graph::degree(VertexId v) const {
  return static_cast<int>(neighbors(v).size());
}

bool Graph::has_edge(VertexId u, VertexId v) const {
  if (!has_vertex(u) || !has_vertex(v) || u == v) return false;
  const auto& nb = adj_[u];
  return std::binary_search(nb.begin(), nb.end(), v);
}

bool Graph::connected() const {
  if (n_ <= 1) return true;
  std::vector<char> seen(n_, 0);
  std::vector<VertexId> stack = {0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    for (VertexId w : adj_[v]) {
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == n_;
}

VertexRole Graph::role(VertexId v) const {
  if (!has_vertex(v)) throw std::invalid_argument("no such vertex");
  return roles_[v];
}

Graph Graph::with_role(VertexId v, VertexRole role) const {
  return with_roles({{v, role}});
}

Graph Graph::with_roles(
    const std::vector<std::pair<VertexId, VertexRole>>& roles) const {
  Graph g = *this;
  for (auto [v, r] : roles) {
    if (!g.has_vertex(v)) throw std::invalid_argument("no such vertex");
    g.roles_[v] = r;
  }
  return g;
}

void IdentificationMap::validate(const Graph& addend, const Graph& base) const {
  std::set<VertexId> keys, images;
  for (auto [from, to] : entries) {
    if (!addend.has_vertex(from))
      throw std::invalid_argument("identification maps a vertex outside the addend");
    if (!base.has_vertex(to))
      throw std::invalid_argument("identification maps onto a vertex outside the base");
    if (!keys.insert(from).second)
      throw std::invalid_argument("identification maps a vertex twice");
    if (!images.insert(to).second)
      throw std::invalid_argument("identification is not injective");
  }
}

SumResult sum_mod_two(const Graph& base, const Graph& addend,
                      const IdentificationMap& phi) {
  phi.validate(addend, base);

  const int nb = base.vertex_count();
  const int na = addend.vertex_count();
  std::vector<VertexId> image(na, -1);
  for (auto [from, to] : phi.entries) image[from] = to;
  int next = nb;
  for (VertexId v = 0; v < na; ++v) {
    if (image[v] == -1) image[v] = next++;
  }

  std::set<Edge> base_edges(base.edges().begin(), base.edges().end());
  std::set<Edge> mapped;
  for (const Edge& e : addend.edges()) mapped.insert(Edge(image[e.u], image[e.v]));

  std::vector<Edge> result_edges;
  int annihilated = 0;
  for (const Edge& e : base_edges) {
    if (mapped.count(e)) {
      ++annihilated;
    } else {
      result_edges.push_back(e);
    }
  }
  for (const Edge& e : mapped) {
    if (!base_edges.count(e)) result_edges.push_back(e);
  }

  SumResult res;
  res.annihilated = annihilated;
  res.graph = Graph::from_edges(next, std::move(result_edges));
  // identified vertices keep the base label unless the base left it plain
  for (VertexId v = 0; v < nb; ++v) {
    if (base.role(v) != VertexRole::Plain)
      res.graph = res.graph.with_role(v, base.role(v));
  }
  for (VertexId v = 0; v < na; ++v) {
    if (addend.role(v) != VertexRole::Plain &&
        res.graph.role(image[v]) == VertexRole::Plain)
      res.graph = res.graph.with_role(image[v], addend.role(v));
  }

  if (res.graph.edge_count() !=
      base.edge_count() + addend.edge_count() - 2 * annihilated)
    throw std::logic_error("edge accounting broken in sum_mod_two");
  return res;
}

ContractionResult contract_edge(const Graph& g, Edge e) {
  if (!g.has_edge(e)) throw std::invalid_argument("cannot contract a missing edge");
  const int n = g.vertex_count();
  ContractionResult res;
  res.vertex_map.assign(n, -1);
  for (VertexId w = 0; w < n; ++w) {
    if (w == e.v)
      res.vertex_map[w] = e.u;
    else
      res.vertex_map[w] = w < e.v ? w : w - 1;
  }
  std::vector<Edge> edges;
  for (const Edge& f : g.edges()) {
    VertexId a = res.vertex_map[f.u];
    VertexId b = res.vertex_map[f.v];
    if (a != b) edges.emplace_back(a, b);
  }
  res.graph = Graph::from_edges(n - 1, std::move(edges));
  for (VertexId w = 0; w < n; ++w) {
    if (w != e.v && g.role(w) != VertexRole::Plain)
      res.graph = res.graph.with_role(res.vertex_map[w], g.role(w));
  }
  return res;
}

Graph delete_edge(const Graph& g, Edge e) {
  if (!g.has_edge(e)) throw std::invalid_argument("cannot delete a missing edge");
  std::vector<Edge> edges;
  for (const Edge& f : g.edges())
    if (!(f == e)) edges.push_back(f);
  Graph h = Graph::from_edges(g.vertex_count(), std::move(edges));
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (g.role(v) != VertexRole::Plain) h = h.with_role(v, g.role(v));
  return h;
}

Graph add_edge(const Graph& g, Edge e) {
  if (!g.has_vertex(e.u) || !g.has_vertex(e.v))
    throw std::invalid_argument("edge endpoint outside vertex set");
  if (g.has_edge(e)) throw std::invalid_argument("edge already present");
  std::vector<Edge> edges = g.edges();
  edges.push_back(e);
  Graph h = Graph::from_edges(g.vertex_count(), std::move(edges));
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (g.role(v) != VertexRole::Plain) h = h.with_role(v, g.role(v));
  return h;
}

Graph delete_vertex(const Graph& g, VertexId v) {
  if (!g.has_vertex(v)) throw std::invalid_argument("cannot delete a missing vertex");
  const int n = g.vertex_count();
  std::vector<Edge> edges;
  for (const Edge& f : g.edges()) {
    if (f.u == v || f.v == v) continue;
    edges.emplace_back(f.u < v ? f.u : f.u - 1, f.v < v ? f.v : f.v - 1);
  }
  Graph h = Graph::from_edges(n - 1, std::move(edges));
  for (VertexId w = 0; w < n; ++w) {
    if (w == v || g.role(w) == VertexRole::Plain) continue;
    h = h.with_role(w < v ? w : w - 1, g.role(w));
  }
  return h;
}

Graph split_vertex(const Graph& g, VertexId w,
                   const std::vector<VertexId>& moved_neighbors) {
  if (!g.has_vertex(w)) throw std::invalid_argument("no such vertex");
  std::set<VertexId> moved(moved_neighbors.begin(), moved_neighbors.end());
  for (VertexId x : moved)
    if (!g.has_edge(w, x))
      throw std::invalid_argument("moved neighbor is not adjacent to the split vertex");
  if (moved.empty() || moved.size() == g.neighbors(w).size())
    throw std::invalid_argument("degenerate split: both parts must be non-empty");

  const VertexId twin = g.vertex_count();
  std::vector<Edge> edges;
  for (const Edge& f : g.edges()) {
    VertexId a = f.u, b = f.v;
    if (a == w && moved.count(b)) a = twin;
    if (b == w && moved.count(a)) b = twin;
    edges.emplace_back(a, b);
  }
  Graph h = Graph::from_edges(g.vertex_count() + 1, std::move(edges));
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (g.role(v) != VertexRole::Plain) h = h.with_role(v, g.role(v));
  if (g.role(w) != VertexRole::Plain) h = h.with_role(twin, g.role(w));
  return h;
}

Graph permuted(const Graph& g, const std::vector<VertexId>& relabel) {
  const int n = g.vertex_count();
  if (static_cast<int>(relabel.size()) != n)
    throw std::invalid_argument("relabeling size mismatch");
  std::vector<char> hit(n, 0);
  for (VertexId v : relabel) {
    if (v < 0 || v >= n || hit[v])
      throw std::invalid_argument("relabeling is not a bijection");
    hit[v] = 1;
  }
  std::vector<Edge> edges;
  edges.reserve(g.edge_count());
  for (const Edge& e : g.edges()) edges.emplace_back(relabel[e.u], relabel[e.v]);
  Graph h = Graph::from_edges(n, std::move(edges));
  for (VertexId v = 0; v < n; ++v)
    if (g.role(v) != VertexRole::Plain) h = h.with_role(relabel[v], g.role(v));
  return h;
}

SumReplay replay(const SumConfiguration& config) {
  if (config.constituents.empty())
    throw std::invalid_argument("empty sum configuration");
  if (config.glue.size() + 1 != config.constituents.size())
    throw std::invalid_argument("sum configuration needs one map per added constituent");

  SumReplay rep;
  rep.graph = config.constituents[0];
  rep.vertex_images.emplace_back(rep.graph.vertex_count());
  for (VertexId v = 0; v < rep.graph.vertex_count(); ++v)
    rep.vertex_images[0][v] = v;

  for (std::size_t i = 1; i < config.constituents.size(); ++i) {
    const Graph& addend = config.constituents[i];
    const IdentificationMap& phi = config.glue[i - 1];
    const int before = rep.graph.vertex_count();
    SumResult step = sum_mod_two(rep.graph, addend, phi);
    rep.annihilated_pairs += step.annihilated;

    std::vector<VertexId> image(addend.vertex_count(), -1);
    for (auto [from, to] : phi.entries) image[from] = to;
    int next = before;
    for (VertexId v = 0; v < addend.vertex_count(); ++v)
      if (image[v] == -1) image[v] = next++;
    rep.vertex_images.push_back(std::move(image));
    rep.graph = std::move(step.graph);
  }

  std::set<Edge> final_edges(rep.graph.edges().begin(), rep.graph.edges().end());
  std::set<Edge> lost;
  for (std::size_t i = 0; i < config.constituents.size(); ++i) {
    int losses = 0;
    for (const Edge& e : config.constituents[i].edges()) {
      Edge img(rep.vertex_images[i][e.u], rep.vertex_images[i][e.v]);
      if (!final_edges.count(img)) {
        ++losses;
        lost.insert(img);
      }
    }
    rep.constituent_losses.push_back(losses);
  }
  rep.annihilated_edges.assign(lost.begin(), lost.end());
  return rep;
}

}  // namespace mw
