#pragma once

#include "strandkit/embedding.hpp"
#include "strandkit/graph.hpp"
#include "strandkit/product_model.hpp"
#include "strandkit/scene.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace strandkit {

/// Open convex polygons, vertices in counter-clockwise order.
struct ConvexScene {
  std::vector<std::vector<Point>> sets;
};

/// Convex polygon of the intersection of two closed convex polygons (may be
/// degenerate or empty).
std::vector<Point> clip_convex(const std::vector<Point>& a, const std::vector<Point>& b);
Rational twice_area(const std::vector<Point>& polygon);

/// Open sets intersect iff the closed intersection has positive area;
/// a non-empty intersection of zero area is an InputError (tangency).
Graph convex_intersection_graph(const ConvexScene& scene);

struct ConvexDrawing {
  Graph graph;
  std::vector<Point> p;                            // one point per set
  std::map<std::pair<int, int>, Point> q;          // per edge, inside both sets
  std::vector<std::pair<int, int>> edges;          // graph.edges()
  std::vector<int> crossings;                      // per edge
  int max_degree = 0;
  int max_crossings = 0;
};

/// One-bend drawing p_i q_ij p_j; every edge is checked against 2 Δ².
ConvexDrawing convex_to_drawing(const ConvexScene& scene);

/// Δ vertical and Δ horizontal thin rectangles: the K_{Δ,Δ} pattern.
ConvexScene gen_rectangles(int delta);
ConvexScene gen_random_convex(int n, std::uint64_t seed);

struct GridDisk {
  ConvexScene polygons;              // t*t small disks, then the big one
  std::vector<Point> centres;
  std::vector<Rational> radii;
};

GridDisk gen_grid_disk(int t);
/// Intersection graph from exact circle predicates (open disks).
Graph circle_intersection_graph(const GridDisk& family);

/// Segment family with curve ids: gamma 0; gamma_i = i; alpha_i^j and
/// beta_i^j as given by the id helpers below.
StringScene gen_segment_family(int t);
CurveId segment_alpha(int t, int i, int j);
CurveId segment_beta(int t, int i, int j);

/// Model of K_{t,t} (vertices 0..t-1 the gamma_i, t..2t-1 the X_j) in the
/// intersection graph of gen_segment_family(t), vertices by curve id.
MinorModel ktt_minor_model(const Graph& family_graph, int t);

/// True iff no four vertices carry a K_{2,2} subgraph (brute force over 4-subsets).
bool is_k22_free(const Graph& g);

/// Random polyline scene in general position; every pair of curves crosses at
/// most `crossings_per_pair` times.
StringScene gen_random(int n, int crossings_per_pair, std::uint64_t seed);

/// Random outerstring-type scene: every curve grounded on one of `disks`
/// disjoint disks.
StringScene gen_random_grounded(int n, int disks, std::uint64_t seed);

EmbeddedGraph embedded_grid(int rows, int cols);
EmbeddedGraph embedded_wheel(int rim);  // hub = 0
/// Stacked triangulation on n vertices with about `drop` percent of its
/// edges removed (connectivity kept).
EmbeddedGraph random_planar_fixture(int n, int drop, std::uint64_t seed);

}  // namespace strandkit
