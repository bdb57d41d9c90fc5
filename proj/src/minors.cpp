#include "multiwheel/minors.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>

#include "multiwheel/isomorphism.hpp"

namespace mw {

namespace {

std::vector<int> pattern_order(const Graph& pattern) {
  const int pn = pattern.vertex_count();
  std::vector<int> order;
  std::vector<char> placed(pn, 0);
  while (static_cast<int>(order.size()) < pn) {
    int best = -1;
    bool best_attached = false;
    for (int v = 0; v < pn; ++v) {
      if (placed[v]) continue;
      bool attached = false;
      for (int w : order)
        if (pattern.has_edge(v, w)) {
          attached = true;
          break;
        }
      if (best == -1 || (attached && !best_attached) ||
          (attached == best_attached &&
           pattern.degree(v) > pattern.degree(best))) {
        best = v;
        best_attached = attached;
      }
    }
    placed[best] = 1;
    order.push_back(best);
  }
  return order;
}

struct MinorSearch {
  const Graph& host;
  const Graph& pattern;
  int hn, pn;
  std::vector<uint64_t> hadj;
  std::vector<int> order;
  std::vector<uint64_t> branch;  // by pattern vertex id, 0 = unseeded
  uint64_t assigned = 0;
  bool done = false;

  uint64_t set_neighborhood(uint64_t set) const {
    uint64_t out = 0;
    for (uint64_t s = set; s;) {
      int v = std::countr_zero(s);
      s &= s - 1;
      out |= hadj[v];
    }
    return out & ~set;
  }

  bool sets_adjacent(uint64_t a, uint64_t b) const {
    for (uint64_t s = a; s;) {
      int v = std::countr_zero(s);
      s &= s - 1;
      if (hadj[v] & b) return true;
    }
    return false;
  }

  // every pattern edge between seeded sets must stay connectable through the
  // unassigned vertices; once some pair is cut off the whole subtree is dead
  bool still_connectable() const {
    const uint64_t free = ~assigned;
    for (const Edge& pe : pattern.edges()) {
      if (!branch[pe.u] || !branch[pe.v]) continue;
      if (sets_adjacent(branch[pe.u], branch[pe.v])) continue;
      uint64_t reach = branch[pe.u];
      for (;;) {
        uint64_t grown = reach | (set_neighborhood(reach) & free);
        if (grown == reach) break;
        reach = grown;
      }
      if (!sets_adjacent(reach, branch[pe.v])) return false;
    }
    return true;
  }

  void seed(int oi, const std::vector<int>& first_candidates) {
    if (done) return;
    if (oi == pn) {
      done = true;
      return;
    }
    if (hn - std::popcount(assigned) < pn - oi) return;
    const int p = order[oi];
    std::vector<int> candidates;
    if (oi == 0) {
      candidates = first_candidates;
    } else {
      for (int v = 0; v < hn; ++v)
        if (!(assigned >> v & 1)) candidates.push_back(v);
      std::sort(candidates.begin(), candidates.end(), [&](int a, int b) {
        return host.degree(a) > host.degree(b);
      });
    }
    std::vector<int> todo;
    for (int j = 0; j < oi; ++j)
      if (pattern.has_edge(p, order[j])) todo.push_back(order[j]);
    for (int v : candidates) {
      if (done) return;
      if (assigned >> v & 1) continue;
      branch[p] = uint64_t{1} << v;
      assigned |= branch[p];
      realize(oi, p, todo, 0);
      if (done) return;  // keep the witness state intact
      assigned &= ~branch[p];
      branch[p] = 0;
    }
  }

  void realize(int oi, int p, const std::vector<int>& todo, std::size_t t) {
    if (done) return;
    if (!still_connectable()) return;
    if (t == todo.size()) {
      seed(oi + 1, {});
      return;
    }
    const int q = todo[t];
    if (sets_adjacent(branch[p], branch[q])) {
      realize(oi, p, todo, t + 1);
      return;
    }
    std::vector<int> path;
    uint64_t starts = set_neighborhood(branch[p]) & ~assigned;
    for (uint64_t s = starts; s && !done;) {
      int w = std::countr_zero(s);
      s &= s - 1;
      extend(oi, p, todo, t, q, path, w);
    }
  }

  // Grow a path of unassigned vertices away from branch[p]. Once the tip
  // touches branch[q] the path is split between the two sets in every way;
  // prefixes that already touch make longer extensions redundant.
  void extend(int oi, int p, const std::vector<int>& todo, std::size_t t,
              int q, std::vector<int>& path, int w) {
    if (done) return;
    if (hn - std::popcount(assigned) - 1 < pn - oi - 1) return;
    path.push_back(w);
    assigned |= uint64_t{1} << w;
    if (hadj[w] & branch[q]) {
      for (std::size_t c = 0; c <= path.size() && !done; ++c) {
        uint64_t to_p = 0, to_q = 0;
        for (std::size_t i = 0; i < path.size(); ++i) {
          uint64_t bit = uint64_t{1} << path[i];
          (i < c ? to_p : to_q) |= bit;
        }
        branch[p] |= to_p;
        branch[q] |= to_q;
        realize(oi, p, todo, t + 1);
        if (done) return;  // keep the witness state intact
        branch[p] &= ~to_p;
        branch[q] &= ~to_q;
      }
    } else {
      uint64_t nexts = hadj[w] & ~assigned;
      for (uint64_t s = nexts; s && !done;) {
        int x = std::countr_zero(s);
        s &= s - 1;
        extend(oi, p, todo, t, q, path, x);
        if (done) return;
      }
    }
    assigned &= ~(uint64_t{1} << w);
    path.pop_back();
  }
};

std::vector<VertexId> mask_to_vector(uint64_t mask) {
  std::vector<VertexId> out;
  for (uint64_t s = mask; s;) {
    out.push_back(std::countr_zero(s));
    s &= s - 1;
  }
  return out;
}

std::optional<MinorWitness> search_minor(const Graph& host,
                                         const Graph& pattern);

// The separator decomposition below is valid for patterns that are
// 4-connected and miss at most one neighbor per vertex (the octahedron, or
// complete graphs on >= 5 vertices): if a model crossed a separator of at
// most 3 vertices, at least 3 branch sets would avoid the separator, and
// branch sets in different components are non-adjacent, which such patterns
// cannot absorb. Hence every model lives inside one component's torso (the
// component plus the separator completed into a clique).
bool separator_decomposition_applies(const Graph& pattern) {
  const int pn = pattern.vertex_count();
  if (pn < 6) return false;
  for (int v = 0; v < pn; ++v) {
    if (pattern.degree(v) < 4 || pattern.degree(v) < pn - 2) return false;
  }
  return true;
}

std::vector<std::vector<int>> components_without(const Graph& g,
                                                 const std::vector<int>& sep) {
  const int n = g.vertex_count();
  std::vector<char> blocked(n, 0), seen(n, 0);
  for (int v : sep) blocked[v] = 1;
  std::vector<std::vector<int>> comps;
  for (int s = 0; s < n; ++s) {
    if (blocked[s] || seen[s]) continue;
    std::vector<int> comp, queue = {s};
    seen[s] = 1;
    while (!queue.empty()) {
      int v = queue.back();
      queue.pop_back();
      comp.push_back(v);
      for (int w : g.neighbors(v))
        if (!blocked[w] && !seen[w]) {
          seen[w] = 1;
          queue.push_back(w);
        }
    }
    comps.push_back(std::move(comp));
  }
  return comps;
}

Graph torso(const Graph& g, const std::vector<int>& comp,
            const std::vector<int>& sep) {
  std::vector<int> keep = comp;
  keep.insert(keep.end(), sep.begin(), sep.end());
  std::sort(keep.begin(), keep.end());
  std::vector<int> local(g.vertex_count(), -1);
  for (std::size_t i = 0; i < keep.size(); ++i) local[keep[i]] = int(i);
  std::vector<Edge> edges;
  for (const Edge& e : g.edges())
    if (local[e.u] != -1 && local[e.v] != -1)
      edges.emplace_back(local[e.u], local[e.v]);
  for (std::size_t i = 0; i < sep.size(); ++i)
    for (std::size_t j = i + 1; j < sep.size(); ++j)
      edges.emplace_back(local[sep[i]], local[sep[j]]);
  return Graph::from_edges(static_cast<int>(keep.size()), std::move(edges));
}

// Sound "certainly absent" prover: splits the host along small separators
// and recurses into the torsos. Inconclusive (false) answers fall back to
// the direct exhaustive search.
bool absent_across_separators(const Graph& host, const Graph& pattern) {
  if (host.vertex_count() < pattern.vertex_count()) return true;

  std::vector<int> best_sep;
  int best_largest = host.vertex_count() + 1;
  const int n = host.vertex_count();
  std::vector<int> sep;
  auto consider = [&](const std::vector<int>& candidate) {
    auto comps = components_without(host, candidate);
    if (comps.size() < 2) return;
    int largest = 0;
    for (const auto& c : comps)
      largest = std::max(largest, static_cast<int>(c.size()));
    if (largest + static_cast<int>(candidate.size()) < best_largest) {
      best_largest = largest + static_cast<int>(candidate.size());
      best_sep = candidate;
    }
  };
  consider({});
  for (int a = 0; a < n; ++a) {
    consider({a});
    for (int b = a + 1; b < n; ++b) {
      consider({a, b});
      for (int c = b + 1; c < n; ++c) consider({a, b, c});
    }
  }
  if (best_sep.empty() && best_largest > n) {
    // no small separator: decide this piece directly
    return !search_minor(host, pattern).has_value();
  }
  if (best_largest >= n) {
    // separators exist but do not shrink the graph; avoid useless recursion
    return !search_minor(host, pattern).has_value();
  }
  for (const auto& comp : components_without(host, best_sep)) {
    if (static_cast<int>(comp.size() + best_sep.size()) <
        pattern.vertex_count())
      continue;
    if (!absent_across_separators(torso(host, comp, best_sep), pattern))
      return false;
  }
  return true;
}

}  // namespace

std::optional<MinorWitness> has_minor(const Graph& host, const Graph& pattern) {
  if (pattern.vertex_count() > host.vertex_count()) return std::nullopt;
  if (pattern.edge_count() > host.edge_count()) return std::nullopt;
  if (host.vertex_count() > 64)
    throw std::invalid_argument("host beyond exact minor search limit (64)");
  if (pattern.vertex_count() == 0) return MinorWitness{};
  if (separator_prefilter_rules_out(host, pattern)) return std::nullopt;
  if (separator_decomposition_applies(pattern) &&
      absent_across_separators(host, pattern))
    return std::nullopt;
  return search_minor(host, pattern);
}

namespace {

std::optional<MinorWitness> search_minor(const Graph& host,
                                         const Graph& pattern) {
  MinorSearch search{host, pattern, host.vertex_count(),
                     pattern.vertex_count()};
  search.hadj.assign(search.hn, 0);
  for (const Edge& e : host.edges()) {
    search.hadj[e.u] |= uint64_t{1} << e.v;
    search.hadj[e.v] |= uint64_t{1} << e.u;
  }
  search.order = pattern_order(pattern);
  search.branch.assign(search.pn, 0);

  // seeding the first pattern vertex from host orbit representatives is
  // enough: automorphic images of a model are models
  std::vector<int> first;
  try {
    std::vector<int> orbits = vertex_orbits(host);
    std::vector<char> taken(search.hn, 0);
    for (int v = 0; v < search.hn; ++v) {
      if (!taken[orbits[v]]) {
        taken[orbits[v]] = 1;
        first.push_back(v);
      }
    }
  } catch (const std::runtime_error&) {
    for (int v = 0; v < search.hn; ++v) first.push_back(v);
  }
  std::sort(first.begin(), first.end(),
            [&](int a, int b) { return host.degree(a) > host.degree(b); });

  search.seed(0, first);
  if (!search.done) return std::nullopt;

  MinorWitness witness;
  for (int p = 0; p < search.pn; ++p)
    witness.branch_sets.push_back(mask_to_vector(search.branch[p]));
  for (const Edge& pe : pattern.edges()) {
    bool found = false;
    for (VertexId a : witness.branch_sets[pe.u]) {
      for (VertexId b : witness.branch_sets[pe.v]) {
        if (host.has_edge(a, b)) {
          witness.realizations.push_back({pe, Edge(a, b)});
          found = true;
          break;
        }
      }
      if (found) break;
    }
    if (!found) throw std::logic_error("minor search produced a bad witness");
  }
  if (!verify_minor_witness(host, pattern, witness))
    throw std::logic_error("minor witness failed re-validation");
  return witness;
}

}  // namespace

bool verify_minor_witness(const Graph& host, const Graph& pattern,
                          const MinorWitness& witness) {
  if (static_cast<int>(witness.branch_sets.size()) != pattern.vertex_count())
    return false;
  std::vector<char> used(host.vertex_count(), 0);
  for (const auto& set : witness.branch_sets) {
    if (set.empty()) return false;
    for (VertexId v : set) {
      if (!host.has_vertex(v) || used[v]) return false;
      used[v] = 1;
    }
    // connectivity by flood fill inside the set
    std::vector<char> inside(host.vertex_count(), 0), seen(host.vertex_count(), 0);
    for (VertexId v : set) inside[v] = 1;
    std::vector<VertexId> queue = {set[0]};
    seen[set[0]] = 1;
    std::size_t reached = 1;
    while (!queue.empty()) {
      VertexId v = queue.back();
      queue.pop_back();
      for (VertexId w : host.neighbors(v)) {
        if (inside[w] && !seen[w]) {
          seen[w] = 1;
          ++reached;
          queue.push_back(w);
        }
      }
    }
    if (reached != set.size()) return false;
  }
  if (witness.realizations.size() != pattern.edges().size()) return false;
  for (std::size_t i = 0; i < witness.realizations.size(); ++i) {
    const auto& [pe, he] = witness.realizations[i];
    if (!(pe == pattern.edges()[i])) return false;
    if (!host.has_edge(he)) return false;
    auto in_set = [&](const std::vector<VertexId>& set, VertexId v) {
      return std::find(set.begin(), set.end(), v) != set.end();
    };
    const auto& su = witness.branch_sets[pe.u];
    const auto& sv = witness.branch_sets[pe.v];
    if (!((in_set(su, he.u) && in_set(sv, he.v)) ||
          (in_set(su, he.v) && in_set(sv, he.u))))
      return false;
  }
  return true;
}

bool minor_bracket(const Graph& host, const Graph& h1, const Graph& h2) {
  return has_minor(h2, h1).has_value() && has_minor(host, h1).has_value() &&
         !has_minor(host, h2).has_value();
}

bool separator_prefilter_rules_out(const Graph& host, const Graph& pattern) {
  const int pn = pattern.vertex_count();
  if (pn == 0) return false;
  int min_deg = host.vertex_count() + 1;
  for (int v = 0; v < pn; ++v) min_deg = std::min(min_deg, pattern.degree(v));
  const int n = host.vertex_count();
  if (n > 64 || min_deg < 1) return false;

  // every side of the separator must be too small to hold any branch set:
  // a set inside component C needs |C| + |S| >= 1 + min_deg
  auto all_sides_small = [&](const std::vector<int>& sep) {
    std::vector<char> blocked(n, 0), seen(n, 0);
    for (int v : sep) blocked[v] = 1;
    for (int s = 0; s < n; ++s) {
      if (blocked[s] || seen[s]) continue;
      int size = 0;
      std::vector<int> queue = {s};
      seen[s] = 1;
      while (!queue.empty()) {
        int v = queue.back();
        queue.pop_back();
        ++size;
        for (int w : host.neighbors(v))
          if (!blocked[w] && !seen[w]) {
            seen[w] = 1;
            queue.push_back(w);
          }
      }
      if (size + static_cast<int>(sep.size()) >= 1 + min_deg) return false;
    }
    return true;
  };

  for (int s = 0; s <= std::min(3, pn - 1); ++s) {
    std::vector<int> sep(s);
    std::function<bool(int, int)> choose = [&](int idx, int from) -> bool {
      if (idx == s) return all_sides_small(sep);
      for (int v = from; v < n; ++v) {
        sep[idx] = v;
        if (choose(idx + 1, v + 1)) return true;
      }
      return false;
    };
    if (choose(0, 0)) return true;
  }
  return false;
}

}  // namespace mw
