#pragma once

#include <array>
#include <string>
#include <variant>
#include <vector>

#include "multiwheel/graph.hpp"
#include "multiwheel/planarity.hpp"

namespace mw {

// Which two of its edges a constituent wheel gives up in the sum, named by
// edge kind (rim or spike) in cyclic order.
enum class SectionType { RimRim, SpikeSpike, SpikeRim, RimSpike };

const char* section_type_name(SectionType t);  // rr / ss / sr / rs

struct Section {
  int order = 1;  // wheel order parameter q, wheel has 2q+1 rim vertices
  SectionType type = SectionType::RimRim;
};

struct MultiwheelSpec {
  std::vector<Section> sections;

  int total_order() const;  // Q = sum of section orders
  void validate() const;    // odd section count >= 3, orders >= 1
  std::string to_string() const;
};

struct ProjectiveSpec {
  int central_order = 1;               // central wheel has 2q+1 rim vertices
  std::vector<int> satellite_orders;   // exactly 2q+1 of them

  int satellite_total() const;
  void validate() const;
  std::string to_string() const;
};

// ----- elementary builders --------------------------------------------------

Graph cycle_graph(int k);                    // k >= 3
Graph path_graph(int k);                     // k vertices
Graph complete_graph(int k);
Graph complete_bipartite(int a, int b);

// hub 0 joined to the rim cycle 1..k; n = k+1, m = 2k
Graph wheel(int k);

Graph octahedron();

struct OctahedronMinus {
  Graph graph;
  Edge missing;  // adding it back gives the octahedron
};
OctahedronMinus octahedron_minus();

// ----- the families ---------------------------------------------------------

struct BuiltMultiwheel {
  Graph graph;
  SumConfiguration configuration;
};

// k odd wheels sharing one central vertex, each losing exactly two edges to
// annihilation, glued cyclically through shared boundary tips. Certifies
// n = 2Q+1, m = 4Q, the per-wheel two-edge loss and planarity; throws
// certificate_error otherwise.
BuiltMultiwheel plane_multiwheel(const MultiwheelSpec& spec);

struct BaseGraph {
  Graph graph;
  SumConfiguration configuration;
  // contracting this edge gives the octahedron minus an edge
  Edge contraction_edge;
  // contracting all three gives the minimal wheel
  std::array<Edge, 3> hub_rim_edges;
};

// the 7-vertex, 12-edge sum of three minimal wheels
BaseGraph base_graph();

// shadow vertex per original adjacent to the original's neighborhood, plus
// an apex adjacent to all shadows
Graph mycielski(const Graph& g);

struct GrotzschClassGraph {
  Graph graph;      // mycielski(cycle(2q+1))
  Embedding embedding;  // 2(2q+1) quadrilateral faces, Euler characteristic 1
};

GrotzschClassGraph grotzsch_class(int q);

// Central wheel of order 2q+1 plus 2q+1 satellite odd wheels. Each satellite
// designates two adjacent spikes and a rim edge that do not form a triangle;
// the middle spike annihilates a central rim edge and the outer spike / rim
// edge annihilate against the neighboring satellites. Certifies m = 2n-2,
// the per-satellite three-edge loss and the central k-edge loss.
BuiltMultiwheel projective_multiwheel(const ProjectiveSpec& spec);

// Chain of odd wheels, consecutive wheels sharing one annihilated edge, not
// closed into a cycle. A single order is the bare wheel.
Graph unclosed_sequence(const std::vector<int>& orders);

// Three-wheel closed sum in which the five-wheel keeps the shared center as
// its hub but loses two spikes whose tips are not adjacent on its rim. Every
// wheel still loses exactly two edges, yet the sum is non-planar and only
// 3-chromatic.
BuiltMultiwheel nonplanar_counterexample();

// ----- spec strings (CLI syntax) --------------------------------------------

using FamilySpec = std::variant<MultiwheelSpec, int /* grotzsch q */,
                                ProjectiveSpec>;

// "w:1rr-3ss-3sr"  plane multiwheel sections
// "g:q=2"          grotzsch class member
// "p:c=1;s=1,1,2"  projective multiwheel
FamilySpec parse_family_spec(const std::string& text);

std::string family_spec_to_string(const FamilySpec& spec);

}  // namespace mw
