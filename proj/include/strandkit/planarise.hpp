#pragma once

#include "strandkit/arrangement.hpp"
#include "strandkit/colouring.hpp"
#include "strandkit/embedding.hpp"

#include <map>
#include <vector>

namespace strandkit {

enum class VertexKind { Endpoint, Dummy };

/// The planarisation C'. With n curves in id order, curve i has start vertex
/// 2i and end vertex 2i+1; the dummy of event e is 2n+e. Edge tags are the
/// owning curve ids.
struct Planarisation {
  EmbeddedGraph graph;
  std::vector<VertexKind> kind;
  std::vector<int> event_of;         // dummy -> event id, -1 for endpoints
  std::vector<CurveId> curve_of;     // endpoint -> curve, -1 for dummies
  std::vector<CurveId> curves;       // sorted
  std::map<CurveId, std::vector<int>> paths;       // L_gamma
  std::map<CurveId, std::vector<int>> path_edges;  // edge ids along L_gamma
  Arrangement arrangement;

  int num_endpoints() const { return 2 * static_cast<int>(curves.size()); }
  int endpoint(CurveId c, CurveEnd end) const;
  bool is_endpoint(int v) const { return kind[static_cast<std::size_t>(v)] == VertexKind::Endpoint; }
  /// 0 for endpoints, min colour of the two crossing curves for dummies.
  int level(int v, const OrderedColouring& colouring) const;
};

/// Throws InputError("isolated curve; strip first") if some curve crosses nothing.
Planarisation planarise(const Arrangement& arrangement);

/// A fragment as a subpath of L_gamma: positions first..last (inclusive)
/// of the path; both ends are endpoints of gamma or crossings with
/// smaller-colour curves.
struct Fragment {
  CurveId curve = 0;
  int first = 0;
  int last = 0;
};

std::vector<Fragment> fragments(const Planarisation& p, const OrderedColouring& colouring, CurveId curve);

/// Interiors of the fragment subpaths with at least three vertices.
std::vector<std::vector<int>> sections(const Planarisation& p, const OrderedColouring& colouring, CurveId curve);

/// C^phi. Endpoints keep their numbers 0..2n-1 (they are never merged).
struct ColouredPlanarisation {
  EmbeddedGraph graph;  // multigraph, loops and parallel edges kept
  std::vector<int> level;
  std::vector<int> psi;  // V(C') -> V(C^phi)
  std::map<CurveId, std::vector<int>> walks;
  std::vector<std::vector<int>> sections;  // all sections of C', in curve order
  int num_endpoints = 0;
  OrderedColouring colouring;

  bool is_endpoint(int x) const { return x < num_endpoints; }
};

ColouredPlanarisation coloured_planarisation(const Planarisation& p, const OrderedColouring& colouring);

/// C^phi - E_C as a simple graph. Host vertex i is C^phi vertex
/// num_endpoints + i.
Graph host_graph(const ColouredPlanarisation& cp);
inline int host_index(const ColouredPlanarisation& cp, int x) { return x - cp.num_endpoints; }
inline int cp_index(const ColouredPlanarisation& cp, int h) { return h + cp.num_endpoints; }

/// Independent audits; each throws CheckFailure describing the first violation.
void check_planarisation(const Planarisation& p);
void check_sections_disjoint(const ColouredPlanarisation& cp);
void check_psi_partition(const Planarisation& p, const ColouredPlanarisation& cp);
void check_unique_curve(const Planarisation& p, const ColouredPlanarisation& cp);  // exactly one curve per vertex
void check_no_consecutive_level(const ColouredPlanarisation& cp);
/// Crossing curves have meeting walks. The converse fails in general (two
/// curves crossing one section of a lower curve share its vertex), so it is
/// reported by walk_meetings_without_crossing instead of being checked.
void check_walk_intersections(const ColouredPlanarisation& cp, const Arrangement& arrangement);
std::vector<std::pair<CurveId, CurveId>> walk_meetings_without_crossing(const ColouredPlanarisation& cp,
                                                                       const Arrangement& arrangement);

}  // namespace strandkit
