#pragma once

#include <optional>
#include <string>
#include <vector>

#include "multiwheel/graph.hpp"

namespace mw {

struct CanonicalForm {
  // labeling[v] = position of v in the canonical order
  std::vector<VertexId> labeling;
  // graph6 of the canonically relabeled graph; equal across isomorphic graphs
  std::string key;
};

// Iterated degree/neighborhood refinement plus backtracking over the first
// smallest non-singleton cell; the canonical order minimizes the adjacency
// encoding. Exact for any input, sized for graphs up to a few dozen vertices.
CanonicalForm canonical_form(const Graph& g);

// Witness maps vertices of a onto vertices of b preserving adjacency.
std::optional<std::vector<VertexId>> find_isomorphism(const Graph& a,
                                                      const Graph& b);
bool is_isomorphic(const Graph& a, const Graph& b);

// Every adjacency-preserving bijection g -> g. Throws if the group exceeds
// the cap (not reachable for the graphs this artifact handles).
std::vector<std::vector<VertexId>> automorphism_group(const Graph& g,
                                                      std::size_t cap = 1000000);

// orbit id per vertex under the full automorphism group
std::vector<int> vertex_orbits(const Graph& g);

// Lexicographically least sorted image of the subset under the given group
// elements; used to merge patterns that differ only by symmetry.
std::vector<VertexId> canonical_subset(
    const std::vector<VertexId>& subset,
    const std::vector<std::vector<VertexId>>& group);

}  // namespace mw
