#pragma once

#include <optional>
#include <vector>

#include "multiwheel/graph.hpp"

namespace mw {

// color index per vertex, 0..k-1
using Coloring = std::vector<int>;

// proper and total with colors in 0..k-1
bool is_proper_coloring(const Graph& g, const Coloring& coloring, int k);

// Exact decision with witness. Saturation-ordered backtracking; ties broken
// by degree, then vertex index, so results are reproducible.
std::optional<Coloring> k_color(const Graph& g, int k);

// Exact chromatic number: greedy clique lower bound, saturation-greedy upper
// bound, then k-colorability decisions in between. Empty graph -> 0.
int chromatic_number(const Graph& g);

struct EdgeCheck {
  Edge edge;
  int chromatic_after = 0;
  std::optional<Coloring> witness;  // proper coloring of g minus the edge
};

struct VertexCheck {
  VertexId vertex = 0;
  int chromatic_after = 0;
  std::optional<Coloring> witness;  // coloring of g minus the vertex (ids shifted)
};

struct ContractionCheck {
  Edge edge;
  int chromatic_after = 0;
};

struct CriticalityReport {
  int chromatic_number = 0;
  bool edge_critical = false;
  bool vertex_critical = false;
  std::vector<EdgeCheck> edge_checks;
  std::vector<VertexCheck> vertex_checks;
  std::vector<ContractionCheck> contraction_checks;

  bool four_critical() const {
    return chromatic_number == 4 && edge_critical && vertex_critical;
  }
};

// chi(g), chi(g - e) for every edge with a 3-coloring witness where one
// exists, likewise per vertex. Contraction results are reported only for the
// designated edges handed in. Checks the deletion monotonicity invariant
// chi(g-e) in {chi, chi-1} on every run.
CriticalityReport certify_4_critical(
    const Graph& g, const std::vector<Edge>& designated_contractions = {});

// Re-derives every claim in the report against g (witnesses re-validated
// independently of the search that produced them).
bool verify_report(const Graph& g, const CriticalityReport& report);

// Enumerates all proper 4-colorings (modulo color permutation), takes the
// union of minimum-size color classes of each, and returns the distinct
// patterns modulo graph automorphism. Rejects graphs with chi != 4.
std::vector<std::vector<VertexId>> lonely_color_classes(const Graph& g);

}  // namespace mw
