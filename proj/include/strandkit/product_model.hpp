#pragma once

#include "strandkit/arrangement.hpp"
#include "strandkit/colouring.hpp"
#include "strandkit/planarise.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace strandkit {

/// A model of a graph G (vertices 0..n-1) in a host graph: one branch set
/// of host vertices per vertex of G.
struct MinorModel {
  Graph host;
  std::vector<std::vector<int>> branch_sets;
};

struct ModelReport {
  bool valid = true;
  std::string violated_clause;  // "non-empty", "disjoint", "connected", "edge"
  std::string detail;
};

/// Checks all model clauses by direct search over `model.host`.
ModelReport verify_model(const MinorModel& model, const Graph& g);

/// Host vertex h of C^phi - E_C with copy c in 1..copies.
struct ProductVertex {
  int host = 0;
  int copy = 1;
  friend auto operator<=>(const ProductVertex&, const ProductVertex&) = default;
};

/// The model of G in (C^phi - E_C) ⊠ K_{d+1}. mu is indexed like the
/// intersection graph; host indices follow host_graph(cp).
struct ProductModel {
  Graph base;
  int copies = 1;
  std::vector<CurveId> ids;
  std::vector<std::vector<ProductVertex>> mu;

  int flat(const ProductVertex& p) const { return p.host * copies + (p.copy - 1); }
  MinorModel flatten() const;
};

/// Copies are assigned per host vertex in increasing curve-id order.
/// Throws CheckFailure("parameter d understated at vertex x") if some vertex
/// lies on more than d+1 walks.
ProductModel build_model(const ColouredPlanarisation& cp, const IntersectionGraph& ig, int d);

/// Projection of each branch set onto the host equals W_gamma minus E_C.
void check_projection(const ProductModel& model, const ColouredPlanarisation& cp);

struct WalkDistances {
  std::map<CurveId, int> diameter;         // measured in C^phi
  std::map<CurveId, int> diameter_host;    // measured in C^phi - E_C
  std::map<CurveId, int> radius;           // weak radius in C^phi - E_C
  int max_diameter = 0;
  int max_diameter_host = 0;
};

/// Weak diameters of W_gamma \ E_C. Throws CheckFailure naming gamma, x, y
/// if some distance exceeds `bound`.
WalkDistances walk_weak_diameter(const ColouredPlanarisation& cp, const BigInt& bound);

/// max over non-endpoint x of dist_{C^phi}(x, Y); Y lists curve ends.
/// Throws InputError if some curve has no end in Y, CheckFailure if the
/// value exceeds t-1.
int grounded_distance_check(const Planarisation& p, const ColouredPlanarisation& cp,
                            const std::vector<std::pair<CurveId, CurveEnd>>& Y);

nlohmann::json model_to_json(const ProductModel& model);
nlohmann::json model_report_to_json(const ModelReport& report);

}  // namespace strandkit
