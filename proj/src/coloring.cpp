#include "multiwheel/coloring.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "multiwheel/isomorphism.hpp"

namespace mw {

namespace {

constexpr int kMaxColors = 63;

// DSATUR vertex choice: most saturated, then highest degree, then lowest id.
int pick_vertex(const Graph& g, const std::vector<int>& color,
                const std::vector<uint64_t>& neighbor_colors) {
  int best = -1, best_sat = -1, best_deg = -1;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (color[v] != -1) continue;
    int sat = std::popcount(neighbor_colors[v]);
    int deg = g.degree(v);
    if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
      best = v;
      best_sat = sat;
      best_deg = deg;
    }
  }
  return best;
}

bool extend(const Graph& g, int k, std::vector<int>& color,
            std::vector<uint64_t>& neighbor_colors, int colored, int max_used) {
  if (colored == g.vertex_count()) return true;
  const int v = pick_vertex(g, color, neighbor_colors);
  // a fresh color beyond max_used+1 is symmetric to max_used+1
  const int limit = std::min(k - 1, max_used + 1);
  for (int c = 0; c <= limit; ++c) {
    if (neighbor_colors[v] >> c & 1) continue;
    color[v] = c;
    std::vector<std::pair<int, uint64_t>> touched;
    for (VertexId w : g.neighbors(v)) {
      if (color[w] == -1 && !(neighbor_colors[w] >> c & 1)) {
        touched.emplace_back(w, neighbor_colors[w]);
        neighbor_colors[w] |= uint64_t{1} << c;
      }
    }
    if (extend(g, k, color, neighbor_colors, colored + 1,
               std::max(max_used, c)))
      return true;
    for (auto& [w, old] : touched) neighbor_colors[w] = old;
    color[v] = -1;
  }
  return false;
}

int greedy_clique(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> order(n);
  for (int v = 0; v < n; ++v) order[v] = v;
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return g.degree(a) > g.degree(b); });
  std::vector<int> clique;
  for (int v : order) {
    bool fits = true;
    for (int w : clique)
      if (!g.has_edge(v, w)) {
        fits = false;
        break;
      }
    if (fits) clique.push_back(v);
  }
  return static_cast<int>(clique.size());
}

int greedy_upper_bound(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> color(n, -1);
  std::vector<uint64_t> neighbor_colors(n, 0);
  int used = 0;
  for (int step = 0; step < n; ++step) {
    int v = pick_vertex(g, color, neighbor_colors);
    int c = 0;
    while (neighbor_colors[v] >> c & 1) ++c;
    color[v] = c;
    used = std::max(used, c + 1);
    for (VertexId w : g.neighbors(v))
      if (color[w] == -1) neighbor_colors[w] |= uint64_t{1} << c;
  }
  return used;
}

}  // namespace

bool is_proper_coloring(const Graph& g, const Coloring& coloring, int k) {
  if (static_cast<int>(coloring.size()) != g.vertex_count()) return false;
  for (int c : coloring)
    if (c < 0 || c >= k) return false;
  for (const Edge& e : g.edges())
    if (coloring[e.u] == coloring[e.v]) return false;
  return true;
}

std::optional<Coloring> k_color(const Graph& g, int k) {
  if (k < 0) throw std::invalid_argument("negative color count");
  if (k > kMaxColors) throw std::invalid_argument("palette beyond engine limit");
  const int n = g.vertex_count();
  if (n == 0) return Coloring{};
  if (k == 0) return std::nullopt;
  if (g.edge_count() > 0 && k == 1) return std::nullopt;
  std::vector<int> color(n, -1);
  std::vector<uint64_t> neighbor_colors(n, 0);
  if (!extend(g, k, color, neighbor_colors, 0, -1)) return std::nullopt;
  return color;
}

int chromatic_number(const Graph& g) {
  if (g.vertex_count() == 0) return 0;
  const int upper = greedy_upper_bound(g);
  for (int k = greedy_clique(g); k < upper; ++k)
    if (k_color(g, k)) return k;
  return upper;
}

CriticalityReport certify_4_critical(
    const Graph& g, const std::vector<Edge>& designated_contractions) {
  CriticalityReport report;
  report.chromatic_number = chromatic_number(g);
  const int chi = report.chromatic_number;

  bool edges_all_drop = g.edge_count() > 0;
  for (const Edge& e : g.edges()) {
    Graph h = delete_edge(g, e);
    EdgeCheck check{e, chromatic_number(h), std::nullopt};
    if (check.chromatic_after != chi && check.chromatic_after != chi - 1)
      throw std::logic_error("deletion monotonicity violated for an edge");
    if (check.chromatic_after <= 3) check.witness = k_color(h, 3);
    if (check.chromatic_after != 3) edges_all_drop = false;
    report.edge_checks.push_back(std::move(check));
  }
  report.edge_critical = chi == 4 && edges_all_drop;

  bool vertices_all_drop = g.vertex_count() > 0;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    Graph h = delete_vertex(g, v);
    VertexCheck check{v, chromatic_number(h), std::nullopt};
    if (check.chromatic_after <= 3) check.witness = k_color(h, 3);
    if (check.chromatic_after != 3) vertices_all_drop = false;
    report.vertex_checks.push_back(std::move(check));
  }
  report.vertex_critical = chi == 4 && vertices_all_drop;

  for (const Edge& e : designated_contractions) {
    report.contraction_checks.push_back(
        {e, chromatic_number(contract_edge(g, e).graph)});
  }
  return report;
}

bool verify_report(const Graph& g, const CriticalityReport& report) {
  if (report.chromatic_number != chromatic_number(g)) return false;
  if (report.edge_checks.size() != g.edges().size()) return false;
  bool edges_all_drop = g.edge_count() > 0;
  for (const EdgeCheck& check : report.edge_checks) {
    Graph h = delete_edge(g, check.edge);
    if (check.witness &&
        !is_proper_coloring(h, *check.witness, 3))
      return false;
    if (chromatic_number(h) != check.chromatic_after) return false;
    if (check.chromatic_after != 3) edges_all_drop = false;
  }
  if (report.edge_critical !=
      (report.chromatic_number == 4 && edges_all_drop))
    return false;
  for (const VertexCheck& check : report.vertex_checks) {
    Graph h = delete_vertex(g, check.vertex);
    if (check.witness && !is_proper_coloring(h, *check.witness, 3))
      return false;
    if (chromatic_number(h) != check.chromatic_after) return false;
  }
  return true;
}

std::vector<std::vector<VertexId>> lonely_color_classes(const Graph& g) {
  if (chromatic_number(g) != 4)
    throw std::invalid_argument("lonely color classes need a 4-chromatic graph");
  const int n = g.vertex_count();

  std::set<std::vector<VertexId>> patterns;
  std::vector<int> color(n, -1);
  // canonical color order (a vertex may open at most one fresh color) so each
  // partition into classes is produced exactly once
  auto enumerate = [&](auto&& self, int v, int used) -> void {
    if (v == n) {
      if (used != 4) return;
      std::vector<int> size(4, 0);
      for (int c : color) ++size[c];
      int smallest = *std::min_element(size.begin(), size.end());
      std::vector<VertexId> pattern;
      for (int w = 0; w < n; ++w)
        if (size[color[w]] == smallest) pattern.push_back(w);
      patterns.insert(pattern);
      return;
    }
    const int limit = std::min(3, used);
    for (int c = 0; c <= limit; ++c) {
      bool ok = true;
      for (VertexId w : g.neighbors(v)) {
        if (w < v && color[w] == c) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      color[v] = c;
      self(self, v + 1, std::max(used, c + 1));
      color[v] = -1;
    }
  };
  enumerate(enumerate, 0, 0);

  const auto group = automorphism_group(g);
  std::set<std::vector<VertexId>> reduced;
  for (const auto& pattern : patterns)
    reduced.insert(canonical_subset(pattern, group));
  return {reduced.begin(), reduced.end()};
}

}  // namespace mw
