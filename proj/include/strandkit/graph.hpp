#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace strandkit {

/// Simple undirected graph on vertices 0..n-1. No loops, no parallel edges.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n) : adj_(static_cast<std::size_t>(n)) {}

  int num_vertices() const { return static_cast<int>(adj_.size()); }
  int num_edges() const;
  int add_vertex();

  /// Adds uv unless it is a loop or already present. Returns true if added.
  bool add_edge(int u, int v);
  bool has_edge(int u, int v) const;
  std::span<const int> neighbours(int v) const { return adj_[static_cast<std::size_t>(v)]; }
  int degree(int v) const { return static_cast<int>(adj_[static_cast<std::size_t>(v)].size()); }
  int max_degree() const;

  /// Edges as (u, v) with u < v, lexicographically sorted.
  std::vector<std::pair<int, int>> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::vector<int>> adj_;
};

inline constexpr int kUnreachable = -1;

/// Multi-source BFS distances; unreachable vertices get kUnreachable.
std::vector<int> bfs_distances(const Graph& g, std::span<const int> sources);
std::vector<int> bfs_distances(const Graph& g, int source);

/// Connected component label per vertex, labels 0.. in order of smallest member.
std::vector<int> component_labels(const Graph& g);
bool is_connected(const Graph& g);

/// Max distance from v; kUnreachable if some vertex cannot be reached.
int eccentricity(const Graph& g, int v);
/// Minimum eccentricity; kUnreachable for disconnected or empty graphs.
int radius(const Graph& g);

Graph induced_subgraph(const Graph& g, std::span<const int> vertices);

/// Strong product g ⊠ K_n; vertex (x, c) with c in 0..n-1 is x * n + c.
Graph strong_product_with_clique(const Graph& g, int n);

/// Exact degeneracy: max over the min-degree removal sequence of the removed degree.
int degeneracy(const Graph& g);

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph complete_bipartite(int a, int b);
Graph grid_graph(int rows, int cols);
Graph star_graph(int leaves);
Graph wheel_graph(int rim);

}  // namespace strandkit
