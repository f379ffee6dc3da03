#pragma once

#include "strandkit/graph.hpp"

#include <span>
#include <vector>

namespace strandkit {

/// Multigraph with a general embedding scheme: a cyclic rotation of half-edges
/// at every vertex plus a signature (+1 / -1) on every edge. Loops and
/// parallel edges are allowed. Half-edge 2e sits at edge(e).u, 2e+1 at edge(e).v.
class EmbeddedGraph {
 public:
  struct Edge {
    int u = 0;
    int v = 0;
    int sign = 1;
    int tag = -1;  // free-form owner label (curve id for planarisations)
  };

  EmbeddedGraph() = default;
  explicit EmbeddedGraph(int n) : rotation_(static_cast<std::size_t>(n)) {}

  int add_vertex();
  /// Adds an edge without touching any rotation; callers set rotations afterwards.
  int add_edge(int u, int v, int sign = 1, int tag = -1);
  void set_rotation(int v, std::vector<int> half_edges);

  int num_vertices() const { return static_cast<int>(rotation_.size()); }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  const Edge& edge(int e) const { return edges_[static_cast<std::size_t>(e)]; }
  std::span<const Edge> edges() const { return edges_; }
  std::span<const int> rotation(int v) const { return rotation_[static_cast<std::size_t>(v)]; }
  int degree(int v) const { return static_cast<int>(rotation_[static_cast<std::size_t>(v)].size()); }

  static int twin(int h) { return h ^ 1; }
  int head(int h) const;  // vertex the half-edge is attached to
  int rotation_successor(int h) const;
  int rotation_predecessor(int h) const;

  /// Throws CheckFailure unless every half-edge appears exactly once, at its own vertex.
  void validate() const;

  /// Euler genus summed over connected components; isolated vertices count 0.
  int euler_genus() const;
  int num_components() const;
  int num_faces() const;

  /// Flips local orientations so every signature is +1. Returns false (and
  /// leaves the graph unchanged) if the embedding is non-orientable.
  bool orient();
  bool all_positive() const;

  /// Face boundary walks as half-edge cycles. Requires all signatures +1.
  std::vector<std::vector<int>> faces() const;

  /// Result of an operation that renumbers vertices.
  struct Mapped;

  /// Contracts the given (non-loop) edges. Vertices are renumbered by the
  /// smallest original vertex of each class, so untouched low indices are stable.
  Mapped contract(std::span<const int> edge_ids) const;

  /// Deletes vertices and their incident edges; survivors keep relative order.
  Mapped remove_vertices(std::span<const int> vertices) const;

  /// Merges each group into one new vertex appended at the end; the merged
  /// rotation concatenates the members' rotations in the given group order.
  Mapped identify(std::span<const std::vector<int>> groups) const;

  /// Drops loops and all but the lowest-id edge of each parallel class.
  EmbeddedGraph simplified() const;

  Graph to_graph() const;

 private:
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> rotation_;
  std::vector<int> position_;  // index of each half-edge inside its rotation

  void rebuild_positions();
};

struct EmbeddedGraph::Mapped {
  EmbeddedGraph graph;
  std::vector<int> vertex_map;  // old vertex -> new vertex, -1 if removed
};

}  // namespace strandkit
