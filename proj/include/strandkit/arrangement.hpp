#pragma once

#include "strandkit/graph.hpp"
#include "strandkit/scene.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace strandkit {

/// A transversal crossing of two distinct curves, curve_a < curve_b.
/// Chirality +1: the counter-clockwise rotation at the crossing is
/// (a forward, b forward, a backward, b backward); -1 swaps the two b rays.
struct CrossingEvent {
  int id = 0;
  CurveId curve_a = 0;
  CurveId curve_b = 0;
  std::optional<Point> location;
  int index_in_a = 0;  // position among the events on curve_a, from its start
  int index_in_b = 0;
  int chirality = 1;
  std::string label;  // abstract crossing label (geometric mode: decimal id)

  CurveId other(CurveId c) const { return c == curve_a ? curve_b : curve_a; }
};

struct Arrangement {
  std::vector<CurveId> curves;                // sorted
  std::vector<CrossingEvent> events;          // indexed by id
  std::map<CurveId, std::vector<int>> along;  // event ids in order along each curve
  std::set<std::pair<CurveId, int>> twists;

  const std::vector<int>& events_on(CurveId c) const;
};

/// Geometric scenes: exact segment intersection over all pairs; every
/// degeneracy (touching, overlap, triple point, endpoint on another curve)
/// is an InputError. Abstract scenes compile directly from the label sequences.
Arrangement compute_arrangement(const StringScene& scene);

struct IntersectionGraph {
  std::vector<CurveId> ids;  // vertex i is curve ids[i]
  Graph graph;

  int index_of(CurveId c) const;
};

IntersectionGraph intersection_graph(const Arrangement& arrangement);

/// Grounded curve ends of a disk in counter-clockwise boundary order.
/// Geometric disks sort by angle around the centre, starting from angle 0.
std::vector<std::pair<CurveId, CurveEnd>> boundary_order(const StringScene& scene, int disk);

/// The abstract form of a scene: labels are event ids, chirality and disk
/// boundary orders are made explicit.
StringScene to_abstract(const StringScene& scene, const Arrangement& arrangement);

/// Removes curves that cross nothing.
StringScene strip_isolated(const StringScene& scene, const Arrangement& arrangement);

nlohmann::json events_to_json(const Arrangement& arrangement);

}  // namespace strandkit
