#pragma once

// Shared fixture graphs and independent brute-force oracles used to
// cross-check the library's exact algorithms. The oracles here deliberately
// avoid the library's search code: plain enumeration only.

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "multiwheel/families.hpp"
#include "multiwheel/graph.hpp"
#include "multiwheel/isomorphism.hpp"

namespace fixtures {

using mw::Edge;
using mw::Graph;
using mw::VertexId;

inline Graph cube_graph() {
  std::vector<Edge> edges;
  for (int v = 0; v < 8; ++v)
    for (int bit = 0; bit < 3; ++bit)
      if (v < (v ^ 1 << bit)) edges.emplace_back(v, v ^ 1 << bit);
  return Graph::from_edges(8, std::move(edges));
}

inline Graph petersen_graph() {
  std::vector<Edge> edges;
  for (int i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);      // outer cycle
    edges.emplace_back(i, i + 5);            // spokes
    edges.emplace_back(i + 5, (i + 2) % 5 + 5);  // inner pentagram
  }
  return Graph::from_edges(10, std::move(edges));
}

inline Graph random_graph(int n, double p, unsigned seed) {
  std::mt19937 rng(seed);
  std::bernoulli_distribution flip(p);
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (flip(rng)) edges.emplace_back(u, v);
  return Graph::from_edges(n, std::move(edges));
}

inline std::vector<VertexId> random_permutation(int n, unsigned seed) {
  std::vector<VertexId> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  std::mt19937 rng(seed);
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

struct Named {
  std::string name;
  Graph graph;
};

// small named graphs, all at most 8 vertices
inline std::vector<Named> small_corpus() {
  std::vector<Named> out;
  out.push_back({"K1", mw::complete_graph(1)});
  out.push_back({"K2", mw::complete_graph(2)});
  out.push_back({"K4", mw::complete_graph(4)});
  out.push_back({"K5", mw::complete_graph(5)});
  out.push_back({"K6", mw::complete_graph(6)});
  out.push_back({"C4", mw::cycle_graph(4)});
  out.push_back({"C5", mw::cycle_graph(5)});
  out.push_back({"C7", mw::cycle_graph(7)});
  out.push_back({"P4", mw::path_graph(4)});
  out.push_back({"W5", mw::wheel(5)});
  out.push_back({"W6", mw::wheel(6)});
  out.push_back({"K33", mw::complete_bipartite(3, 3)});
  out.push_back({"O", mw::octahedron()});
  out.push_back({"O-", mw::octahedron_minus().graph});
  out.push_back({"base", mw::base_graph().graph});
  out.push_back({"cube", cube_graph()});
  out.push_back({"rnd7a", random_graph(7, 0.4, 11)});
  out.push_back({"rnd7b", random_graph(7, 0.55, 12)});
  out.push_back({"rnd8a", random_graph(8, 0.35, 13)});
  out.push_back({"rnd8b", random_graph(8, 0.5, 14)});
  return out;
}

// corpus for the planarity oracle, up to 10 vertices
inline std::vector<Named> planarity_corpus() {
  std::vector<Named> out = small_corpus();
  out.push_back({"petersen", petersen_graph()});
  out.push_back({"grid33", [] {
                   std::vector<Edge> edges;
                   for (int r = 0; r < 3; ++r)
                     for (int c = 0; c < 3; ++c) {
                       int v = 3 * r + c;
                       if (c + 1 < 3) edges.emplace_back(v, v + 1);
                       if (r + 1 < 3) edges.emplace_back(v, v + 3);
                     }
                   return Graph::from_edges(9, std::move(edges));
                 }()});
  out.push_back({"rnd9", random_graph(9, 0.35, 15)});
  out.push_back({"rnd10a", random_graph(10, 0.3, 16)});
  out.push_back({"rnd10b", random_graph(10, 0.45, 17)});
  return out;
}

// ---------------------------------------------------------------------------
// chromatic number by direct enumeration of assignments

inline bool brute_colorable(const Graph& g, int k, std::vector<int>& color,
                            int v) {
  if (v == g.vertex_count()) return true;
  for (int c = 0; c < k; ++c) {
    bool ok = true;
    for (VertexId w : g.neighbors(v)) {
      if (w < v && color[w] == c) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    color[v] = c;
    if (brute_colorable(g, k, color, v + 1)) return true;
  }
  return false;
}

inline int brute_chromatic_number(const Graph& g) {
  if (g.vertex_count() == 0) return 0;
  for (int k = 1;; ++k) {
    std::vector<int> color(g.vertex_count(), -1);
    if (brute_colorable(g, k, color, 0)) return k;
  }
}

// ---------------------------------------------------------------------------
// minor containment by delete/contract enumeration

inline bool brute_subgraph_mono(const Graph& pattern, const Graph& host,
                                std::vector<int>& map, std::vector<char>& used,
                                int v) {
  if (v == pattern.vertex_count()) return true;
  for (int w = 0; w < host.vertex_count(); ++w) {
    if (used[w]) continue;
    bool ok = true;
    for (VertexId x : pattern.neighbors(v)) {
      if (x < v && !host.has_edge(map[x], w)) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    used[w] = 1;
    map[v] = w;
    if (brute_subgraph_mono(pattern, host, map, used, v + 1)) return true;
    used[w] = 0;
  }
  return false;
}

inline bool brute_has_subgraph(const Graph& host, const Graph& pattern) {
  if (pattern.vertex_count() > host.vertex_count()) return false;
  std::vector<int> map(pattern.vertex_count(), -1);
  std::vector<char> used(host.vertex_count(), 0);
  return brute_subgraph_mono(pattern, host, map, used, 0);
}

inline bool brute_has_minor_impl(const Graph& host, const Graph& pattern,
                                 std::set<std::string>& failed) {
  if (pattern.vertex_count() > host.vertex_count() ||
      pattern.edge_count() > host.edge_count())
    return false;
  const std::string key = mw::canonical_form(host).key;
  if (failed.count(key)) return false;
  if (brute_has_subgraph(host, pattern)) return true;
  for (const Edge& e : host.edges()) {
    if (brute_has_minor_impl(mw::contract_edge(host, e).graph, pattern, failed))
      return true;
  }
  failed.insert(key);
  return false;
}

inline bool brute_has_minor(const Graph& host, const Graph& pattern) {
  std::set<std::string> failed;
  return brute_has_minor_impl(host, pattern, failed);
}

// ---------------------------------------------------------------------------
// planarity via exhaustive Kuratowski subdivision search

inline bool brute_disjoint_paths(
    const Graph& g, const std::vector<std::pair<int, int>>& wanted,
    std::size_t index, const std::vector<int>& branch, std::vector<char>& used,
    std::vector<int>& path) {
  if (index == wanted.size()) return true;
  const int target = branch[wanted[index].second];
  const int tail = path.empty() ? branch[wanted[index].first] : path.back();
  for (VertexId w : g.neighbors(tail)) {
    if (w == target) {
      std::vector<int> saved;
      std::swap(saved, path);
      if (brute_disjoint_paths(g, wanted, index + 1, branch, used, path))
        return true;
      std::swap(saved, path);
      continue;
    }
    if (used[w]) continue;
    used[w] = 1;
    path.push_back(w);
    if (brute_disjoint_paths(g, wanted, index, branch, used, path)) return true;
    path.pop_back();
    used[w] = 0;
  }
  return false;
}

inline bool brute_has_subdivision(const Graph& g, int parts_a, int parts_b) {
  // parts_b == 0 means a complete pattern on parts_a branch vertices
  const int b = parts_a + parts_b;
  std::vector<std::pair<int, int>> wanted;
  if (parts_b == 0) {
    for (int i = 0; i < parts_a; ++i)
      for (int j = i + 1; j < parts_a; ++j) wanted.push_back({i, j});
  } else {
    for (int i = 0; i < parts_a; ++i)
      for (int j = 0; j < parts_b; ++j) wanted.push_back({i, parts_a + j});
  }
  const int min_deg = parts_b == 0 ? parts_a - 1 : parts_b;
  std::vector<int> candidates;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) >= min_deg) candidates.push_back(v);
  if (static_cast<int>(candidates.size()) < b) return false;

  const auto try_branch = [&](const std::vector<int>& branch) {
    std::vector<char> used(g.vertex_count(), 0);
    for (int v : branch) used[v] = 1;
    std::vector<int> path;
    return brute_disjoint_paths(g, wanted, 0, branch, used, path);
  };

  // every b-subset of the candidates, then (for the bipartite pattern) every
  // split of the subset into the two sides with side A anchored first
  std::vector<int> pick(b, -1);
  auto combos = [&](auto&& self, int slot, int from) -> bool {
    if (slot == b) {
      if (parts_b == 0) return try_branch(pick);
      std::vector<int> mask(b, 0);
      std::fill(mask.begin() + parts_a, mask.end(), 1);
      std::sort(mask.begin() + 1, mask.end());  // pick[0] stays on side A
      do {
        std::vector<int> branch(b, -1);
        int ai = 0, bi = parts_a;
        for (int i = 0; i < b; ++i)
          branch[mask[i] ? bi++ : ai++] = pick[i];
        if (try_branch(branch)) return true;
      } while (std::next_permutation(mask.begin() + 1, mask.end()));
      return false;
    }
    for (std::size_t c = from; c < candidates.size(); ++c) {
      pick[slot] = candidates[c];
      if (self(self, slot + 1, static_cast<int>(c) + 1)) return true;
    }
    return false;
  };
  return combos(combos, 0, 0);
}

inline bool brute_is_planar(const Graph& g) {
  return !brute_has_subdivision(g, 5, 0) && !brute_has_subdivision(g, 3, 3);
}

}  // namespace fixtures
