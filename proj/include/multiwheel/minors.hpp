#pragma once

#include <optional>
#include <vector>

#include "multiwheel/graph.hpp"

namespace mw {

struct MinorWitness {
  // branch_sets[p] = connected set of host vertices standing for pattern
  // vertex p; sets pairwise disjoint
  std::vector<std::vector<VertexId>> branch_sets;
  // per pattern edge: (pattern edge, host edge realizing it)
  std::vector<std::pair<Edge, Edge>> realizations;
};

// Exact minor containment by branch-set search: pattern vertices seeded one
// at a time (descending degree, each adjacent to an earlier one), pattern
// edges realized by growing branch sets along paths of unassigned host
// vertices. Absence answers come only from exhausted search. Hosts are
// limited to 64 vertices.
std::optional<MinorWitness> has_minor(const Graph& host, const Graph& pattern);

// Independent check: disjoint connected branch sets, every pattern edge
// realized by its stated host edge.
bool verify_minor_witness(const Graph& host, const Graph& pattern,
                          const MinorWitness& witness);

// <h1,h2> brackets host: h1 is a minor of h2 and of host, h2 is not a minor
// of host.
bool minor_bracket(const Graph& host, const Graph& h1, const Graph& h2);

// Sound impossibility test: a separator S with fewer vertices than the
// pattern order, all of whose split-off sides are too small to hold a branch
// set with min_degree(pattern) neighbor sets, rules the minor out. Never
// claims presence.
bool separator_prefilter_rules_out(const Graph& host, const Graph& pattern);

}  // namespace mw
