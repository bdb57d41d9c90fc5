#pragma once

#include <map>
#include <optional>
#include <vector>

#include "multiwheel/graph.hpp"

namespace mw {

// Combinatorial surface embedding: faces as closed walks (cyclic vertex
// sequences). Each edge is traversed exactly twice over all faces, counting
// both directions together, so non-orientable face lists are representable.
struct Embedding {
  Graph graph;
  std::vector<std::vector<VertexId>> faces;
};

struct EmbeddingSummary {
  int euler_characteristic = 0;
  std::map<int, int> face_lengths;  // length -> count
};

// Checks every Embedding invariant; throws certificate_error naming the
// violated rule and the offending face or edge.
EmbeddingSummary validate_embedding(const Embedding& e);

// True iff the embedding is valid, has Euler characteristic 1 and only
// quadrilateral faces. Such a graph necessarily has m = 2n-2.
bool certify_projective_quadrangulation(const Embedding& e);

struct QuadrilateralCondition {
  std::vector<std::pair<Edge, int>> four_cycles_through;  // per edge
  bool every_edge_in_two = false;
};

// Counts 4-cycles through each edge; the boolean is the necessary condition
// for quadrangulating any surface (every edge in at least two 4-cycles).
QuadrilateralCondition edge_quadrilateral_condition(const Graph& g);

struct KuratowskiWitness {
  bool k5 = false;  // otherwise a K_{3,3} subdivision
  std::vector<VertexId> branch_vertices;
  // one path per pattern edge, endpoints included, interiors disjoint
  std::vector<std::vector<VertexId>> paths;
};

bool verify_kuratowski(const Graph& g, const KuratowskiWitness& witness);

struct PlanarityResult {
  bool planar = false;
  // face list with Euler characteristic 2; only emitted for connected inputs
  std::optional<Embedding> embedding;
  std::optional<KuratowskiWitness> witness;
};

// Exact planarity by face-by-face insertion over the biconnected blocks,
// block rotations merged at cut vertices. Returns a spherical face list on
// success and a Kuratowski subdivision on failure.
PlanarityResult is_planar(const Graph& g);

struct DualResult {
  Graph graph;
  bool collapsed = false;  // parallel dual edges or loops were simplified
};

// One dual vertex per face, one dual edge per primal edge; requires a
// connected graph with a spherical (Euler characteristic 2) embedding.
DualResult planar_dual(const Embedding& e);

}  // namespace mw
