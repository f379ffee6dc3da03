#pragma once

#include "strandkit/scene.hpp"

#include <map>
#include <string>
#include <vector>

namespace strandkit {

struct BoundFormula {
  std::string id;
  std::vector<std::string> params;
  std::string formula;
};

/// Every closed form known to `evaluate_bound`, in a fixed order.
const std::vector<BoundFormula>& bound_catalogue();

/// Exact evaluation. InputError for an unknown id, a missing, unexpected or
/// negative parameter, or an exponent too large to evaluate.
BigInt evaluate_bound(const std::string& id, const std::map<std::string, BigInt>& params);

BigInt binomial(const BigInt& n, int k);

}  // namespace strandkit
