#pragma once

#include "strandkit/embedding.hpp"
#include "strandkit/graph.hpp"
#include "strandkit/product_model.hpp"
#include "strandkit/scene.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace strandkit {

struct TreeDecomposition {
  std::vector<std::vector<int>> bags;            // each sorted
  std::vector<std::pair<int, int>> tree_edges;   // between bag indices

  int width() const;
};

struct TdReport {
  bool valid = true;
  int width = -1;
  std::string reason;
};

/// Checks: the bag graph is a tree, every vertex and edge is covered, and
/// the bags containing each vertex induce a connected subtree.
TdReport verify_td(const TreeDecomposition& td, const Graph& g);

struct Layering {
  std::vector<int> layer_of;
  int num_layers() const;
};

/// Edges must join equal or adjacent layers.
bool verify_layering(const Layering& layering, const Graph& g);
/// max over bags and layers of |bag ∩ layer|.
int layered_width(const TreeDecomposition& td, const Layering& layering);

struct ExactTreewidth {
  int width = -1;
  TreeDecomposition witness;
};

/// Memoised elimination-order search over vertex subsets; at most 16 vertices.
ExactTreewidth exact_treewidth(const Graph& g);

/// Layers by BFS distance from the roots; InputError if a vertex is unreachable.
Layering bfs_layering(const Graph& g, std::span<const int> roots);

/// Width at most 3 * ecc(root) for a connected genus-0 embedded graph (loops
/// and parallel edges allowed). Vertex ids are those of `plane`. Each bag
/// is a union of three root paths of a BFS tree, so it meets every BFS
/// layer in at most three vertices.
TreeDecomposition radius_decomposition(const EmbeddedGraph& plane, int root);

/// Bag-wise replacement of x by x*n + c for c in 0..n-1.
TreeDecomposition product_lift(const TreeDecomposition& td, int n);
/// Inverse of product_lift on bags: x*n + c becomes x.
TreeDecomposition product_project(const TreeDecomposition& td, int n);

/// Bag B becomes { v : mu(v) ∩ B ≠ ∅ }.
TreeDecomposition minor_lift(const TreeDecomposition& td, const MinorModel& model);

/// Restricts every bag to the kept vertices, renumbered by `new_id` (-1 drops).
TreeDecomposition restrict_td(const TreeDecomposition& td, const std::vector<int>& new_id);

/// Adds one singleton bag per listed vertex, hung off bag 0 (or forming the
/// whole decomposition if td is empty).
TreeDecomposition attach_singletons(TreeDecomposition td, const std::vector<int>& vertices);

struct MergeReport {
  int layers = 0;
  int layered_width = 0;
  int implied_bound = 0;  // layers * layered_width - 1
};

MergeReport merge_layers(const TreeDecomposition& td, const Layering& layering);

struct OuterstringResult {
  TreeDecomposition td;  // over intersection-graph vertex indices
  IntersectionGraph graph;
  int width = -1;
  BigInt bound;
  int t = 0;
  int d = 0;
  int eccentricity = 0;  // of w in C^phi_0
  int host_width = -1;   // radius decomposition of C^phi_0
  OrderedColouring colouring;
};

/// The planar outerstring pipeline. Every curve must be grounded on the
/// single disk of the scene. `colouring` defaults to default_colouring.
OuterstringResult outerstring_decomposition(const StringScene& scene,
                                            const std::optional<OrderedColouring>& colouring = std::nullopt);

struct GcOuterstringReport {
  int c = 0;
  int genus = 0;
  bool orientable = true;
  int t = 0;
  int d = 0;
  int cover_radius = 0;
  int layers = 0;
  BigInt bound;
  std::optional<OuterstringResult> constructed;
};

GcOuterstringReport gc_outerstring_report(const StringScene& scene,
                                          const std::optional<OrderedColouring>& colouring = std::nullopt);

struct LtwResult {
  TreeDecomposition td;
  Layering layering;
  int layered_width = 0;
  int host_layered_width = 0;
  BigInt bound;  // 3 (4r+1)(d+1)
};

/// Bag-lift of a layered host decomposition of C^phi - E_C through the
/// product model; G's layering groups branch-set centres into blocks of
/// 2r+1 host layers.
LtwResult ltw_lift(const ColouredPlanarisation& cp, const ProductModel& model, int r);

std::string td_to_pace(const TreeDecomposition& td, int num_vertices);
nlohmann::json td_to_json(const TreeDecomposition& td, int num_vertices);

}  // namespace strandkit
