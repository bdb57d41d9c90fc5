#include "multiwheel/isomorphism.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

#include "multiwheel/serialize.hpp"

namespace mw {

namespace {

// Refine colors until stable: a vertex's new color is (old color, sorted
// multiset of neighbor colors). Color values are dense ranks, so equal
// signatures collapse to equal colors.
void refine(const Graph& g, std::vector<int>& color) {
  const int n = g.vertex_count();
  for (;;) {
    std::vector<std::pair<std::vector<int>, int>> sig(n);
    for (int v = 0; v < n; ++v) {
      std::vector<int> s;
      s.push_back(color[v]);
      for (VertexId w : g.neighbors(v)) s.push_back(color[w] + n);
      std::sort(s.begin() + 1, s.end());
      sig[v] = {std::move(s), v};
    }
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return sig[a].first < sig[b].first; });
    std::vector<int> next(n, 0);
    int rank = 0;
    for (int i = 0; i < n; ++i) {
      if (i > 0 && sig[order[i]].first != sig[order[i - 1]].first) ++rank;
      next[order[i]] = rank;
    }
    if (next == color) return;
    color = std::move(next);
  }
}

// adjacency bits of g in the order given by position[], upper triangle
std::vector<char> encode(const Graph& g, const std::vector<int>& position) {
  const int n = g.vertex_count();
  std::vector<int> at(n);  // at[p] = vertex in position p
  for (int v = 0; v < n; ++v) at[position[v]] = v;
  std::vector<char> bits;
  bits.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i)
      bits.push_back(g.has_edge(at[i], at[j]) ? 1 : 0);
  return bits;
}

struct CanonSearch {
  const Graph& g;
  std::vector<char> best_bits;
  std::vector<int> best_position;
  bool have_best = false;

  void run(std::vector<int> color) {
    refine(g, color);
    const int n = g.vertex_count();

    // first smallest non-singleton color class
    std::map<int, std::vector<int>> cells;
    for (int v = 0; v < n; ++v) cells[color[v]].push_back(v);
    const std::vector<int>* target = nullptr;
    for (const auto& [c, members] : cells) {
      if (members.size() < 2) continue;
      if (!target || members.size() < target->size()) target = &members;
    }

    if (!target) {
      std::vector<int> position(n);
      for (int v = 0; v < n; ++v) position[v] = color[v];
      std::vector<char> bits = encode(g, position);
      if (!have_best || bits < best_bits) {
        best_bits = std::move(bits);
        best_position = std::move(position);
        have_best = true;
      }
      return;
    }
    std::vector<int> members = *target;
    for (int v : members) {
      std::vector<int> branched(color);
      // individualize v below its cell, then shift everything else up
      for (int w = 0; w < n; ++w)
        branched[w] = branched[w] * 2 + (w == v ? 0 : 1);
      run(std::move(branched));
    }
  }
};

struct AutSearch {
  const Graph& g;
  std::vector<int> base_color;
  std::vector<std::vector<VertexId>> found;
  std::size_t cap;

  void search(std::vector<VertexId>& map, std::vector<char>& used, int v) {
    const int n = g.vertex_count();
    if (v == n) {
      found.push_back(map);
      if (found.size() > cap)
        throw std::runtime_error("automorphism group larger than cap");
      return;
    }
    for (int w = 0; w < n; ++w) {
      if (used[w] || base_color[w] != base_color[v]) continue;
      bool ok = true;
      for (VertexId x : g.neighbors(v)) {
        if (x < v && !g.has_edge(map[x], w)) {
          ok = false;
          break;
        }
      }
      // non-neighbors among mapped vertices must stay non-adjacent
      if (ok) {
        for (int x = 0; x < v && ok; ++x) {
          if (!g.has_edge(x, v) && g.has_edge(map[x], w)) ok = false;
        }
      }
      if (!ok) continue;
      used[w] = 1;
      map[v] = w;
      search(map, used, v + 1);
      used[w] = 0;
    }
  }
};

}  // namespace

CanonicalForm canonical_form(const Graph& g) {
  const int n = g.vertex_count();
  CanonSearch search{g};
  search.run(std::vector<int>(n, 0));
  CanonicalForm form;
  form.labeling = search.have_best ? search.best_position : std::vector<int>{};
  form.key = to_graph6(n == 0 ? g : permuted(g, form.labeling));
  return form;
}

std::optional<std::vector<VertexId>> find_isomorphism(const Graph& a,
                                                      const Graph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count())
    return std::nullopt;
  auto degree_profile = [](const Graph& g) {
    std::vector<int> d;
    for (int v = 0; v < g.vertex_count(); ++v) d.push_back(g.degree(v));
    std::sort(d.begin(), d.end());
    return d;
  };
  if (degree_profile(a) != degree_profile(b)) return std::nullopt;

  CanonicalForm fa = canonical_form(a);
  CanonicalForm fb = canonical_form(b);
  if (fa.key != fb.key) return std::nullopt;

  const int n = a.vertex_count();
  std::vector<VertexId> at_b(n);
  for (int v = 0; v < n; ++v) at_b[fb.labeling[v]] = v;
  std::vector<VertexId> witness(n);
  for (int v = 0; v < n; ++v) witness[v] = at_b[fa.labeling[v]];
  for (const Edge& e : a.edges()) {
    if (!b.has_edge(witness[e.u], witness[e.v]))
      throw std::logic_error("canonical forms matched but witness fails");
  }
  return witness;
}

bool is_isomorphic(const Graph& a, const Graph& b) {
  return find_isomorphism(a, b).has_value();
}

std::vector<std::vector<VertexId>> automorphism_group(const Graph& g,
                                                      std::size_t cap) {
  const int n = g.vertex_count();
  std::vector<int> color(n, 0);
  refine(g, color);
  AutSearch search{g, color, {}, cap};
  std::vector<VertexId> map(n, -1);
  std::vector<char> used(n, 0);
  search.search(map, used, 0);
  return search.found;
}

std::vector<int> vertex_orbits(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& perm : automorphism_group(g)) {
    for (int v = 0; v < n; ++v) {
      int a = find(v), b = find(perm[v]);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  std::vector<int> orbit(n);
  std::map<int, int> rank;
  for (int v = 0; v < n; ++v) {
    int root = find(v);
    auto [it, fresh] = rank.try_emplace(root, static_cast<int>(rank.size()));
    orbit[v] = it->second;
  }
  return orbit;
}

std::vector<VertexId> canonical_subset(
    const std::vector<VertexId>& subset,
    const std::vector<std::vector<VertexId>>& group) {
  std::vector<VertexId> best(subset);
  std::sort(best.begin(), best.end());
  for (const auto& perm : group) {
    std::vector<VertexId> image;
    image.reserve(subset.size());
    for (VertexId v : subset) image.push_back(perm[v]);
    std::sort(image.begin(), image.end());
    if (image < best) best = std::move(image);
  }
  return best;
}

}  // namespace mw
