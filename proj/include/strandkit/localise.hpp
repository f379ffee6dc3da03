#pragma once

#include "strandkit/arrangement.hpp"

#include <json.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace strandkit {

/// One chosen crossing event per edge of G, keyed by (lower id, higher id).
struct CrossingSelection {
  std::map<std::pair<CurveId, CurveId>, int> event;
};

/// The first common crossing along the lower-id curve.
CrossingSelection select_crossings(const Arrangement& arrangement);

/// H with V(H) = E(G), the allowed pairs R, the neighbour orders sigma, and a
/// combinatorial plane drawing of H given as label sequences along each curve
/// (selected labels are the H-vertices, the others are crossings of H-edges).
struct AuxiliaryInstance {
  std::vector<std::pair<CurveId, CurveId>> vertices;  // sorted edges of G
  struct Edge {
    CurveId curve = 0;
    int index = 0;  // joins sigma[curve][index] and sigma[curve][index + 1]
    int u = 0;      // H-vertex indices
    int v = 0;
  };
  std::vector<Edge> edges;
  std::set<std::pair<int, int>> R;  // H-edge indices, first < second
  std::map<CurveId, std::vector<CurveId>> sigma;

  std::map<CurveId, std::vector<std::string>> along;
  std::map<std::string, std::pair<CurveId, CurveId>> curves_of;
  std::map<std::string, int> chirality;
  std::map<std::string, int> vertex_of;  // selected label -> H-vertex
  std::map<CurveId, int> first_edge;

  int vertex_index(CurveId a, CurveId b) const;
  /// H-edge of `curve` holding the crossing at position `pos` of along[curve].
  int edge_at(CurveId curve, int pos) const;
  /// Number of pairs of R containing each H-edge.
  std::vector<int> r_degrees() const;
};

/// InputError if the arrangement is not a plane drawing (genus > 0) or has
/// isolated curves.
AuxiliaryInstance build_HR(const Arrangement& arrangement, const CrossingSelection& selection);

struct WeakRealisationReport {
  bool valid = true;
  std::string reason;
};

/// Plane drawing of H in which only R-pairs of H-edges cross.
WeakRealisationReport check_weak_realisation(const AuxiliaryInstance& instance);

struct BigonReport {
  int removed = 0;  // bigons removed (two crossings each)
  int crossings_before = 0;
  int crossings_after = 0;
};

/// Deletes empty bigons (two non-selected crossings of the same pair that are
/// consecutive on both curves) until none remain. A seed shuffles the
/// order in which candidates are taken.
AuxiliaryInstance bigon_reduce(const AuxiliaryInstance& instance, std::optional<std::uint64_t> seed = std::nullopt,
                               BigonReport* report = nullptr);

/// Abstract scene whose curve u runs through its sigma order; curves with a
/// single neighbour become stubs through one crossing.
StringScene reassemble(const AuxiliaryInstance& instance);

struct CensusEntry {
  int count = 0;
  int degree = 0;
  BigInt bound;
  bool within_bound = true;
};

struct Census {
  std::map<CurveId, CensusEntry> curves;
  int max_count = 0;
  bool all_within_bound = true;

  bool is_delta_string(int delta) const { return max_count <= delta; }
};

Census crossing_census(const Arrangement& arrangement);

nlohmann::json census_to_json(const Census& census);
nlohmann::json instance_to_json(const AuxiliaryInstance& instance);

}  // namespace strandkit
