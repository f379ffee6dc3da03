#pragma once

#include "strandkit/arrangement.hpp"

#include <json.hpp>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace strandkit {

/// Colours are 1..t; smaller colour means earlier in the order.
struct OrderedColouring {
  std::map<CurveId, int> phi;
  int t = 0;

  int operator()(CurveId c) const;
};

struct ColouringParams {
  int t = 0;
  int d = 0;
  int k = 0;
  BigInt r;
};

/// Greedy smallest-available colouring along `order` (vertex indices of ig).
OrderedColouring greedy_colouring(const IntersectionGraph& ig, const std::vector<int>& order);

/// Repeated min-degree removal, ties to the smallest index.
std::vector<int> degeneracy_order(const Graph& g);

/// Number of neighbours of each vertex that appear earlier in `order`.
std::vector<int> back_degrees(const Graph& g, const std::vector<int>& order);

/// Greedy colouring along the reverse of the degeneracy order.
OrderedColouring default_colouring(const IntersectionGraph& ig);

/// Throws InputError naming a same-colour crossing pair or an uncoloured curve.
void validate_colouring(const Arrangement& arrangement, const OrderedColouring& colouring);

/// (2k+1) * sum_{j=0}^{t-2} k^j.
BigInt distance_bound(int t, int k);

ColouringParams compute_params(const Arrangement& arrangement, const OrderedColouring& colouring);

struct TdegReport {
  bool holds = true;
  std::optional<int> counterexample;  // vertex index with too many higher neighbours
};

/// (t, d)-degeneracy of an ordered colouring given per vertex index.
TdegReport verify_tdeg(const Graph& g, const std::vector<int>& colour, int d);

/// Maps colours to 1..t preserving order; `permutation` (if given) sends
/// old colour c to permutation[c - 1].
OrderedColouring relabel(const OrderedColouring& colouring, const std::vector<int>& permutation = {});

OrderedColouring colouring_from_json(const nlohmann::json& j);
nlohmann::json colouring_to_json(const OrderedColouring& colouring);
nlohmann::json params_to_json(const ColouringParams& params);

}  // namespace strandkit
