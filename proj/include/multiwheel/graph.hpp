#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mw {

using VertexId = int;

// Role tags attached by the family constructors. Purely descriptive: they
// never participate in equality, isomorphism, or canonical forms.
enum class VertexRole { Plain, CentralHub, SectionHub, Rim, Shadow, Apex };

const char* role_name(VertexRole role);
std::optional<VertexRole> role_from_name(const std::string& name);

// Unordered edge, normalized to u < v. Loops are rejected at construction.
struct Edge {
  VertexId u = 0;
  VertexId v = 0;

  Edge() = default;
  Edge(VertexId a, VertexId b);

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Thrown when a construction-time certificate (edge counts, planarity,
// per-wheel annihilation, ...) does not hold.
class certificate_error : public std::runtime_error {
 public:
  certificate_error(std::string certificate, const std::string& detail)
      : std::runtime_error(certificate + ": " + detail),
        certificate_(std::move(certificate)) {}

  const std::string& certificate() const { return certificate_; }

 private:
  std::string certificate_;
};

// Immutable simple undirected graph on dense vertex ids 0..n-1.
class Graph {
 public:
  Graph() = default;

  // Deduplicates parallel edges (edge sets, not multisets); rejects
  // out-of-range endpoints. Loops are already rejected by Edge itself.
  static Graph from_edges(int vertex_count, std::vector<Edge> edges);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<VertexId>& neighbors(VertexId v) const;
  int degree(VertexId v) const;
  bool has_vertex(VertexId v) const { return v >= 0 && v < n_; }
  bool has_edge(VertexId u, VertexId v) const;
  bool has_edge(Edge e) const { return has_edge(e.u, e.v); }
  bool connected() const;

  VertexRole role(VertexId v) const;
  Graph with_role(VertexId v, VertexRole role) const;
  Graph with_roles(const std::vector<std::pair<VertexId, VertexRole>>& roles) const;

  // Labels are ignored: two graphs are equal iff they have the same vertex
  // count and edge set.
  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;                 // sorted, unique
  std::vector<std::vector<VertexId>> adj_;  // sorted neighbor lists
  std::vector<VertexRole> roles_;           // Plain when untagged
};

// Injective partial map gluing an addend graph into a base graph.
// entries: (addend vertex, base vertex).
struct IdentificationMap {
  std::vector<std::pair<VertexId, VertexId>> entries;

  bool empty() const { return entries.empty(); }
  // Throws std::invalid_argument on duplicate keys, duplicate images, or
  // vertices outside the respective graphs.
  void validate(const Graph& addend, const Graph& base) const;
};

struct SumResult {
  Graph graph;
  int annihilated = 0;  // edge pairs present in both operands
};

// Edge sum modulo two: vertex union under phi, symmetric difference of edge
// sets. Coincident edges annihilate and are counted.
SumResult sum_mod_two(const Graph& base, const Graph& addend,
                      const IdentificationMap& phi);

struct ContractionResult {
  Graph graph;
  // old vertex id -> id in the contracted graph (both endpoints map to the
  // merged vertex).
  std::vector<VertexId> vertex_map;
};

// Merges the endpoints of e, collapsing any parallel edges and dropping the
// loop. |V| decreases by exactly one.
ContractionResult contract_edge(const Graph& g, Edge e);

Graph delete_edge(const Graph& g, Edge e);
Graph add_edge(const Graph& g, Edge e);

// Removes v and its incident edges; vertices above v shift down by one.
Graph delete_vertex(const Graph& g, VertexId v);

// Splits w into w (keeping the unmoved edges) and a new vertex (id = old
// vertex count) that takes the edges to moved_neighbors. Both parts of the
// bipartition must be non-empty; the two copies end up non-adjacent.
Graph split_vertex(const Graph& g, VertexId w,
                   const std::vector<VertexId>& moved_neighbors);

// Relabels: relabel[v] is the new id of v. Must be a bijection.
Graph permuted(const Graph& g, const std::vector<VertexId>& relabel);

// A replayable edge sum: constituents glued left to right. glue[i] embeds
// constituents[i+1] into the accumulated graph (accumulated ids are final
// ids, so the maps stay valid throughout the replay).
struct SumConfiguration {
  std::vector<Graph> constituents;
  std::vector<IdentificationMap> glue;
};

struct SumReplay {
  Graph graph;
  // per constituent: local vertex id -> final vertex id
  std::vector<std::vector<VertexId>> vertex_images;
  // per constituent: how many of its edges were annihilated
  std::vector<int> constituent_losses;
  // final-id edges that vanished in the sum
  std::vector<Edge> annihilated_edges;
  int annihilated_pairs = 0;
};

SumReplay replay(const SumConfiguration& config);

}  // namespace mw
