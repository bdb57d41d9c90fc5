#include "multiwheel/planarity.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <string>

namespace mw {

namespace {

std::string face_text(const std::vector<VertexId>& face) {
  std::string s = "(";
  for (std::size_t i = 0; i < face.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(face[i]);
  }
  return s + ")";
}

// ---------------------------------------------------------------------------
// biconnected components

std::vector<std::vector<Edge>> biconnected_components(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<Edge> stack;
  std::vector<std::vector<Edge>> blocks;
  int timer = 0;

  std::function<void(int, int)> dfs = [&](int v, int parent) {
    disc[v] = low[v] = timer++;
    for (VertexId w : g.neighbors(v)) {
      if (disc[w] == -1) {
        stack.emplace_back(v, w);
        dfs(w, v);
        low[v] = std::min(low[v], low[w]);
        if (low[w] >= disc[v]) {
          std::vector<Edge> block;
          Edge top(v, w);
          while (!stack.empty()) {
            Edge e = stack.back();
            stack.pop_back();
            block.push_back(e);
            if (e == top) break;
          }
          blocks.push_back(std::move(block));
        }
      } else if (w != parent && disc[w] < disc[v]) {
        stack.emplace_back(v, w);
        low[v] = std::min(low[v], disc[w]);
      }
    }
  };
  for (int v = 0; v < n; ++v)
    if (disc[v] == -1) dfs(v, -1);
  return blocks;
}

// ---------------------------------------------------------------------------
// face-by-face embedding of one biconnected block

std::vector<VertexId> find_cycle(const std::map<int, std::vector<int>>& adj) {
  std::map<int, int> parent;
  std::map<int, int> depth;
  std::vector<VertexId> cycle;
  std::function<bool(int, int)> dfs = [&](int v, int from) {
    for (int w : adj.at(v)) {
      if (w == from) continue;
      if (depth.count(w)) {
        if (depth[w] < depth[v]) {
          // back edge: walk up from v to w
          int x = v;
          while (x != w) {
            cycle.push_back(x);
            x = parent[x];
          }
          cycle.push_back(w);
          return true;
        }
        continue;
      }
      parent[w] = v;
      depth[w] = depth[v] + 1;
      if (dfs(w, v)) return true;
    }
    return false;
  };
  int root = adj.begin()->first;
  depth[root] = 0;
  parent[root] = -1;
  dfs(root, -1);
  return cycle;
}

struct Fragment {
  std::vector<int> attachments;
  std::vector<int> component;  // empty for a chord
  std::optional<Edge> chord;
  std::vector<int> admissible_faces;
};

// Demoucron-Malgrange-Pertuiset insertion. Returns the face list (simple
// cycles) or nullopt when some fragment has no admissible face.
std::optional<std::vector<std::vector<VertexId>>> embed_block(
    const std::vector<Edge>& block) {
  std::map<int, std::vector<int>> adj;
  for (const Edge& e : block) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  for (auto& [v, nb] : adj) std::sort(nb.begin(), nb.end());

  std::vector<VertexId> start = find_cycle(adj);
  std::vector<std::vector<VertexId>> faces = {start,
                                              {start.rbegin(), start.rend()}};
  std::set<int> emb_v(start.begin(), start.end());
  std::set<Edge> emb_e;
  for (std::size_t i = 0; i < start.size(); ++i)
    emb_e.insert(Edge(start[i], start[(i + 1) % start.size()]));

  while (emb_e.size() < block.size()) {
    std::vector<Fragment> fragments;
    for (const Edge& e : block) {
      if (!emb_e.count(e) && emb_v.count(e.u) && emb_v.count(e.v))
        fragments.push_back({{e.u, e.v}, {}, e, {}});
    }
    std::set<int> visited;
    for (const auto& [v, nb] : adj) {
      if (emb_v.count(v) || visited.count(v)) continue;
      Fragment frag;
      std::set<int> attach;
      std::vector<int> queue = {v};
      visited.insert(v);
      while (!queue.empty()) {
        int x = queue.back();
        queue.pop_back();
        frag.component.push_back(x);
        for (int w : adj.at(x)) {
          if (emb_v.count(w)) {
            attach.insert(w);
          } else if (!visited.count(w)) {
            visited.insert(w);
            queue.push_back(w);
          }
        }
      }
      frag.attachments.assign(attach.begin(), attach.end());
      fragments.push_back(std::move(frag));
    }

    Fragment* chosen = nullptr;
    for (Fragment& frag : fragments) {
      for (std::size_t fi = 0; fi < faces.size(); ++fi) {
        std::set<int> on_face(faces[fi].begin(), faces[fi].end());
        bool all = true;
        for (int a : frag.attachments)
          if (!on_face.count(a)) {
            all = false;
            break;
          }
        if (all) frag.admissible_faces.push_back(static_cast<int>(fi));
      }
      if (frag.admissible_faces.empty()) return std::nullopt;
      if (!chosen ||
          frag.admissible_faces.size() < chosen->admissible_faces.size())
        chosen = &frag;
    }

    // alpha-path between two attachment vertices of the chosen fragment
    std::vector<int> path;
    if (chosen->chord) {
      path = {chosen->chord->u, chosen->chord->v};
    } else {
      const int a = chosen->attachments[0];
      const int b = chosen->attachments[1];
      std::set<int> in_comp(chosen->component.begin(),
                            chosen->component.end());
      std::map<int, int> parent;
      std::vector<int> queue = {a};
      parent[a] = a;
      for (std::size_t qi = 0; qi < queue.size() && !parent.count(b); ++qi) {
        int x = queue[qi];
        for (int w : adj.at(x)) {
          // fragment edges touch the component
          if (!in_comp.count(x) && !in_comp.count(w)) continue;
          if (parent.count(w) || (emb_v.count(w) && w != b)) continue;
          parent[w] = x;
          queue.push_back(w);
        }
      }
      for (int x = b; x != a; x = parent.at(x)) path.push_back(x);
      path.push_back(a);
      std::reverse(path.begin(), path.end());
    }

    // split the admissible face along the path
    const int fi = chosen->admissible_faces[0];
    std::vector<VertexId> face = faces[fi];
    const auto at = [&](int v) {
      return static_cast<int>(
          std::find(face.begin(), face.end(), v) - face.begin());
    };
    const int p = at(path.front());
    const int q = at(path.back());
    const int len = static_cast<int>(face.size());
    std::vector<VertexId> arc1, arc2;
    for (int i = p;; i = (i + 1) % len) {
      arc1.push_back(face[i]);
      if (i == q) break;
    }
    for (int i = q;; i = (i + 1) % len) {
      arc2.push_back(face[i]);
      if (i == p) break;
    }
    std::vector<VertexId> interior(path.begin() + 1, path.end() - 1);
    std::vector<VertexId> face1 = arc1;
    face1.insert(face1.end(), interior.rbegin(), interior.rend());
    std::vector<VertexId> face2 = arc2;
    face2.insert(face2.end(), interior.begin(), interior.end());
    faces[fi] = std::move(face1);
    faces.push_back(std::move(face2));

    for (int x : interior) emb_v.insert(x);
    for (std::size_t i = 0; i + 1 < path.size(); ++i)
      emb_e.insert(Edge(path[i], path[i + 1]));
  }
  return faces;
}

// ---------------------------------------------------------------------------
// rotations: block face lists merged at cut vertices, then global face trace

std::vector<std::vector<VertexId>> trace_faces(
    const Graph& g, const std::vector<std::vector<std::vector<VertexId>>>&
                        block_faces,
    const std::vector<std::vector<Edge>>& single_edge_blocks) {
  const int n = g.vertex_count();
  std::vector<std::vector<int>> rotation(n);

  for (const auto& faces : block_faces) {
    std::map<int, std::map<int, int>> after;
    for (const auto& face : faces) {
      const int len = static_cast<int>(face.size());
      for (int i = 0; i < len; ++i) {
        int a = face[i], b = face[(i + 1) % len], c = face[(i + 2) % len];
        after[b][a] = c;
      }
    }
    for (auto& [v, next] : after) {
      const std::size_t before = rotation[v].size();
      int start = next.begin()->first;
      int x = start;
      std::size_t steps = 0;
      do {
        rotation[v].push_back(x);
        x = next.at(x);
        if (++steps > next.size())
          throw std::logic_error("block rotation did not close");
      } while (x != start);
      if (rotation[v].size() - before != next.size())
        throw std::logic_error("block rotation is not a single cycle");
    }
  }
  for (const auto& block : single_edge_blocks) {
    rotation[block[0].u].push_back(block[0].v);
    rotation[block[0].v].push_back(block[0].u);
  }

  std::vector<std::map<int, int>> pos(n);
  for (int v = 0; v < n; ++v)
    for (std::size_t i = 0; i < rotation[v].size(); ++i)
      pos[v][rotation[v][i]] = static_cast<int>(i);

  std::set<std::pair<int, int>> seen;
  std::vector<std::vector<VertexId>> faces;
  for (int v = 0; v < n; ++v) {
    if (g.degree(v) == 0) faces.push_back({v});
    for (int w : rotation[v]) {
      if (seen.count({v, w})) continue;
      std::vector<VertexId> face;
      int a = v, b = w;
      do {
        seen.insert({a, b});
        face.push_back(a);
        int i = pos[b].at(a);
        int c = rotation[b][(i + 1) % rotation[b].size()];
        a = b;
        b = c;
      } while (!(a == v && b == w));
      faces.push_back(std::move(face));
    }
  }
  return faces;
}

int component_count(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<char> seen(n, 0);
  int comps = 0;
  for (int s = 0; s < n; ++s) {
    if (seen[s]) continue;
    ++comps;
    std::vector<int> queue = {s};
    seen[s] = 1;
    while (!queue.empty()) {
      int v = queue.back();
      queue.pop_back();
      for (int w : g.neighbors(v))
        if (!seen[w]) {
          seen[w] = 1;
          queue.push_back(w);
        }
    }
  }
  return comps;
}

// ---------------------------------------------------------------------------
// Kuratowski subdivisions

struct SubdivisionPattern {
  int vertices;
  std::vector<std::pair<int, int>> edges;
  int min_degree;
};

SubdivisionPattern k5_pattern() {
  SubdivisionPattern p{5, {}, 4};
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j) p.edges.push_back({i, j});
  return p;
}

SubdivisionPattern k33_pattern() {
  SubdivisionPattern p{6, {}, 3};
  for (int i = 0; i < 3; ++i)
    for (int j = 3; j < 6; ++j) p.edges.push_back({i, j});
  return p;
}

struct SubdivisionSearch {
  const Graph& g;
  const SubdivisionPattern& pattern;
  bool k33_symmetry;
  std::vector<int> branch;
  std::vector<char> used;
  std::vector<std::vector<VertexId>> paths;  // aligned with pattern.edges
  bool done = false;

  bool candidate_ok(int slot, int v) {
    if (used[v] || g.degree(v) < pattern.min_degree) return false;
    if (!k33_symmetry) {
      // K5 branch vertices are interchangeable
      return slot == 0 || v > branch[slot - 1];
    }
    // sides sorted internally, and side A anchored below side B's first
    if (slot > 0 && slot != 3 && v < branch[slot - 1]) return false;
    if (slot == 3 && v < branch[0]) return false;
    return true;
  }

  void assign(int slot) {
    if (done) return;
    if (slot == pattern.vertices) {
      if (all_realized()) done = true;
      return;
    }
    // edges back to already placed branch vertices get their paths before
    // the next branch vertex is placed
    for (int v = 0; v < g.vertex_count() && !done; ++v) {
      if (!candidate_ok(slot, v)) continue;
      branch[slot] = v;
      used[v] = 1;
      realize_from(slot);
      if (done) return;  // keep the witness state intact
      used[v] = 0;
      branch[slot] = -1;
    }
  }

  // realize every pattern edge whose endpoints are both placed and whose
  // later endpoint is `slot`, then continue with the next branch vertex
  void realize_from(int slot) {
    std::vector<int> todo;
    for (std::size_t ei = 0; ei < pattern.edges.size(); ++ei) {
      auto [a, b] = pattern.edges[ei];
      if (std::max(a, b) == slot && paths[ei].empty()) todo.push_back(int(ei));
    }
    connect(todo, 0, slot);
  }

  void connect(const std::vector<int>& todo, std::size_t t, int slot) {
    if (done) return;
    if (t == todo.size()) {
      assign(slot + 1);
      return;
    }
    const int ei = todo[t];
    const int from = branch[pattern.edges[ei].first];
    const int to = branch[pattern.edges[ei].second];
    std::vector<VertexId> path = {from};
    walk(path, todo, t, slot, ei, to);
  }

  void walk(std::vector<VertexId>& path, const std::vector<int>& todo,
            std::size_t t, int slot, int ei, int target) {
    if (done) return;
    const int tail = path.back();
    for (VertexId w : g.neighbors(tail)) {
      if (done) return;
      if (w == target) {
        path.push_back(w);
        paths[ei] = path;
        connect(todo, t + 1, slot);
        if (done) return;  // keep the witness state intact
        paths[ei].clear();
        path.pop_back();
        continue;
      }
      if (used[w]) continue;
      used[w] = 1;
      path.push_back(w);
      walk(path, todo, t, slot, ei, target);
      if (done) return;
      path.pop_back();
      used[w] = 0;
    }
  }

  bool all_realized() const {
    for (const auto& p : paths)
      if (p.empty()) return false;
    return true;
  }
};

std::optional<KuratowskiWitness> find_subdivision(const Graph& g, bool k5) {
  SubdivisionPattern pattern = k5 ? k5_pattern() : k33_pattern();
  SubdivisionSearch search{g, pattern, !k5};
  search.branch.assign(pattern.vertices, -1);
  search.used.assign(g.vertex_count(), 0);
  search.paths.assign(pattern.edges.size(), {});
  search.assign(0);
  if (!search.done) return std::nullopt;
  KuratowskiWitness witness;
  witness.k5 = k5;
  witness.branch_vertices = search.branch;
  witness.paths = search.paths;
  return witness;
}

}  // namespace

// ---------------------------------------------------------------------------

EmbeddingSummary validate_embedding(const Embedding& e) {
  const Graph& g = e.graph;
  std::map<Edge, int> uses;
  EmbeddingSummary summary;
  for (std::size_t fi = 0; fi < e.faces.size(); ++fi) {
    const auto& face = e.faces[fi];
    if (face.empty())
      throw certificate_error("embedding", "face " + std::to_string(fi) +
                                               " is empty");
    ++summary.face_lengths[static_cast<int>(face.size())];
    if (face.size() == 1) {
      if (!g.has_vertex(face[0]) || g.degree(face[0]) != 0)
        throw certificate_error(
            "embedding", "singleton face " + face_text(face) +
                             " is only allowed around an isolated vertex");
      continue;
    }
    for (std::size_t i = 0; i < face.size(); ++i) {
      VertexId u = face[i];
      VertexId v = face[(i + 1) % face.size()];
      if (u == v || !g.has_edge(u, v))
        throw certificate_error("embedding",
                                "face " + face_text(face) + " walks " +
                                    std::to_string(u) + "-" +
                                    std::to_string(v) + ", not an edge");
      ++uses[Edge(u, v)];
    }
  }
  for (const Edge& edge : g.edges()) {
    const int count = uses.count(edge) ? uses.at(edge) : 0;
    if (count != 2)
      throw certificate_error(
          "embedding", "edge " + std::to_string(edge.u) + "-" +
                           std::to_string(edge.v) + " traversed " +
                           std::to_string(count) + " times, expected 2");
  }
  summary.euler_characteristic = g.vertex_count() - g.edge_count() +
                                 static_cast<int>(e.faces.size());
  if (summary.euler_characteristic > 2)
    throw certificate_error("embedding",
                            "Euler characteristic above 2 is impossible");
  return summary;
}

bool certify_projective_quadrangulation(const Embedding& e) {
  EmbeddingSummary summary = validate_embedding(e);
  if (summary.euler_characteristic != 1) return false;
  if (summary.face_lengths.size() != 1 ||
      summary.face_lengths.begin()->first != 4)
    return false;
  if (e.graph.edge_count() != 2 * e.graph.vertex_count() - 2)
    throw std::logic_error("quadrangulation accepted with m != 2n-2");
  return true;
}

QuadrilateralCondition edge_quadrilateral_condition(const Graph& g) {
  QuadrilateralCondition result;
  result.every_edge_in_two = g.edge_count() > 0;
  for (const Edge& e : g.edges()) {
    int count = 0;
    for (VertexId x : g.neighbors(e.u)) {
      if (x == e.v) continue;
      for (VertexId y : g.neighbors(e.v)) {
        if (y == e.u || y == x) continue;
        if (g.has_edge(x, y)) ++count;
      }
    }
    result.four_cycles_through.push_back({e, count});
    if (count < 2) result.every_edge_in_two = false;
  }
  return result;
}

bool verify_kuratowski(const Graph& g, const KuratowskiWitness& witness) {
  const int b = witness.k5 ? 5 : 6;
  if (static_cast<int>(witness.branch_vertices.size()) != b) return false;
  std::set<VertexId> branch(witness.branch_vertices.begin(),
                            witness.branch_vertices.end());
  if (static_cast<int>(branch.size()) != b) return false;

  std::vector<std::pair<int, int>> pattern_edges =
      witness.k5 ? k5_pattern().edges : k33_pattern().edges;
  if (witness.paths.size() != pattern_edges.size()) return false;

  std::set<VertexId> interiors;
  for (std::size_t ei = 0; ei < witness.paths.size(); ++ei) {
    const auto& path = witness.paths[ei];
    if (path.size() < 2) return false;
    if (path.front() != witness.branch_vertices[pattern_edges[ei].first] ||
        path.back() != witness.branch_vertices[pattern_edges[ei].second])
      return false;
    for (std::size_t i = 0; i + 1 < path.size(); ++i)
      if (!g.has_edge(path[i], path[i + 1])) return false;
    for (std::size_t i = 1; i + 1 < path.size(); ++i) {
      VertexId v = path[i];
      if (branch.count(v) || interiors.count(v)) return false;
      interiors.insert(v);
    }
  }
  return true;
}

PlanarityResult is_planar(const Graph& g) {
  PlanarityResult result;
  result.planar = true;

  std::vector<std::vector<Edge>> blocks = biconnected_components(g);
  std::vector<std::vector<std::vector<VertexId>>> block_faces;
  std::vector<std::vector<Edge>> single_edge_blocks;
  if (g.vertex_count() >= 3 && g.edge_count() > 3 * g.vertex_count() - 6)
    result.planar = false;
  if (result.planar) {
    for (const auto& block : blocks) {
      if (block.size() == 1) {
        single_edge_blocks.push_back(block);
        continue;
      }
      auto faces = embed_block(block);
      if (!faces) {
        result.planar = false;
        break;
      }
      block_faces.push_back(std::move(*faces));
    }
  }

  if (!result.planar) {
    result.witness = find_subdivision(g, false);
    if (!result.witness) result.witness = find_subdivision(g, true);
    if (!result.witness)
      throw std::logic_error("non-planar graph without a Kuratowski witness");
    return result;
  }

  if (g.connected()) {
    Embedding embedding{g, trace_faces(g, block_faces, single_edge_blocks)};
    const int f = static_cast<int>(embedding.faces.size());
    if (g.vertex_count() - g.edge_count() + f != 2 * component_count(g))
      throw std::logic_error("face trace does not satisfy Euler's formula");
    result.embedding = std::move(embedding);
  }
  return result;
}

DualResult planar_dual(const Embedding& e) {
  EmbeddingSummary summary = validate_embedding(e);
  if (summary.euler_characteristic != 2 || !e.graph.connected())
    throw std::invalid_argument(
        "dual requires a connected graph with a spherical embedding");

  std::map<Edge, std::vector<int>> edge_faces;
  for (std::size_t fi = 0; fi < e.faces.size(); ++fi) {
    const auto& face = e.faces[fi];
    if (face.size() == 1) continue;
    for (std::size_t i = 0; i < face.size(); ++i)
      edge_faces[Edge(face[i], face[(i + 1) % face.size()])].push_back(
          static_cast<int>(fi));
  }

  DualResult result;
  std::vector<Edge> dual_edges;
  std::set<Edge> distinct;
  for (const auto& [edge, fs] : edge_faces) {
    if (fs[0] == fs[1]) {
      result.collapsed = true;  // bridge: dual loop dropped
      continue;
    }
    Edge d(fs[0], fs[1]);
    if (!distinct.insert(d).second) result.collapsed = true;
    dual_edges.push_back(d);
  }
  result.graph = Graph::from_edges(static_cast<int>(e.faces.size()),
                                   std::move(dual_edges));
  return result;
}

}  // namespace mw
