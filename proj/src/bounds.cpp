#include "strandkit/bounds.hpp"

#include "strandkit/error.hpp"

#include <algorithm>
#include <functional>

namespace strandkit {

namespace {

using Params = std::map<std::string, BigInt>;

BigInt power(const BigInt& base, const BigInt& exponent) {
  if (exponent < 0) throw InputError("negative exponent");
  if (exponent > 100000) throw InputError("exponent " + exponent.str() + " too large to evaluate");
  return boost::multiprecision::pow(base, static_cast<unsigned>(exponent));
}

// (2k+1) * sum_{j=0}^{t-2} k^j
BigInt shallow_radius(const BigInt& t, const BigInt& k) {
  BigInt sum = 0;
  BigInt term = 1;
  for (BigInt j = 0; j <= t - 2; ++j) {
    sum += term;
    term *= k;
  }
  return (2 * k + 1) * sum;
}

BigInt rtw_main(const BigInt& r, const BigInt& c, const BigInt& g) {
  return (4 * r + 1) * c * ((2 * (8 * r + 1) * c + 3) * power(2 * g + 7, (6 * r + 2) * (2 * g + 5) - 4) - 1) - 1;
}

BigInt gd_string(const BigInt& g, const BigInt& delta) {
  const BigInt m = std::max<BigInt>(2 * g, 3);
  return 2 * m * (delta + 1) * (delta + 1) * binomial(2 * (delta / 2) + 4, 3) - 1;
}

BigInt localised(const BigInt& degree) { return power(2, degree) * (degree - 1) + 1; }

struct Entry {
  BoundFormula formula;
  std::function<BigInt(const Params&)> eval;
};

const std::vector<Entry>& entries() {
  static const std::vector<Entry> table = [] {
    std::vector<Entry> t;
    auto add = [&](std::string id, std::vector<std::string> params, std::string formula,
                   std::function<BigInt(const Params&)> eval) {
      t.push_back({{std::move(id), std::move(params), std::move(formula)}, std::move(eval)});
    };
    add("outerstring_plane", {"t", "d"}, "(3t-1)(d+1)-1",
        [](const Params& p) { return (3 * p.at("t") - 1) * (p.at("d") + 1) - 1; });
    add("gc_outerstring", {"t", "d", "c", "g"}, "(2t-1)c(2g+3)(d+1)-1", [](const Params& p) {
      return (2 * p.at("t") - 1) * p.at("c") * (2 * p.at("g") + 3) * (p.at("d") + 1) - 1;
    });
    add("outerstring_maxdeg", {"Delta", "c", "g"}, "(2Delta+1)(Delta+1)c(2g+3)-1", [](const Params& p) {
      const BigInt& D = p.at("Delta");
      return (2 * D + 1) * (D + 1) * p.at("c") * (2 * p.at("g") + 3) - 1;
    });
    add("localised", {"Delta"}, "2^Delta(Delta-1)+1", [](const Params& p) { return localised(p.at("Delta")); });
    add("ss_crossings", {"m"}, "2^m m^2", [](const Params& p) { return power(2, p.at("m")) * p.at("m") * p.at("m"); });
    add("gd_string", {"g", "delta"}, "2max{2g,3}(delta+1)^2 C(2floor(delta/2)+4,3)-1",
        [](const Params& p) { return gd_string(p.at("g"), p.at("delta")); });
    add("ps_maxdeg", {"Delta"}, "6(delta+1)^2 C(2floor(delta/2)+4,3)-1 with delta=2^Delta(Delta-1)+1",
        [](const Params& p) { return gd_string(0, localised(p.at("Delta"))); });
    add("rtw_main", {"r", "c", "g"}, "(4r+1)c((2(8r+1)c+3)(2g+7)^((6r+2)(2g+5)-4)-1)-1",
        [](const Params& p) { return rtw_main(p.at("r"), p.at("c"), p.at("g")); });
    add("lemma_distance", {"t", "k"}, "(2k+1)sum_{j=0}^{t-2}k^j",
        [](const Params& p) { return shallow_radius(p.at("t"), p.at("k")); });
    add("ps_ltw", {"t", "k", "d", "g"}, "(4r+1)(d+1)(2g+3) with r=(2k+1)sum_{j=0}^{t-2}k^j", [](const Params& p) {
      return (4 * shallow_radius(p.at("t"), p.at("k")) + 1) * (p.at("d") + 1) * (2 * p.at("g") + 3);
    });
    add("ps_rtw", {"t", "k", "d", "g"}, "rtw_main with r=(2k+1)sum_{j=0}^{t-2}k^j and c=d+1", [](const Params& p) {
      return rtw_main(shallow_radius(p.at("t"), p.at("k")), p.at("d") + 1, p.at("g"));
    });
    add("ps_specific_r", {"Delta"}, "(2Delta+1)sum_{j=0}^{Delta-1}Delta^j",
        [](const Params& p) { return shallow_radius(p.at("Delta") + 1, p.at("Delta")); });
    add("ps_specific_ltw", {"Delta", "g"}, "(4r+1)(Delta+1)(2g+3)", [](const Params& p) {
      const BigInt& D = p.at("Delta");
      return (4 * shallow_radius(D + 1, D) + 1) * (D + 1) * (2 * p.at("g") + 3);
    });
    add("ps_specific_rtw", {"Delta", "g"}, "rtw_main with r=(2Delta+1)sum_{j=0}^{Delta-1}Delta^j and c=Delta+1",
        [](const Params& p) {
          const BigInt& D = p.at("Delta");
          return rtw_main(shallow_radius(D + 1, D), D + 1, p.at("g"));
        });
    add("planar_radius", {"r"}, "3r+1", [](const Params& p) { return 3 * p.at("r") + 1; });
    add("radius_kvertices_ltw", {"r", "c", "l"}, "(2r+1)c*l-1",
        [](const Params& p) { return (2 * p.at("r") + 1) * p.at("c") * p.at("l") - 1; });
    add("radius_kvertices_genus", {"r", "c", "g"}, "(2r+1)c(2g+3)-1",
        [](const Params& p) { return (2 * p.at("r") + 1) * p.at("c") * (2 * p.at("g") + 3) - 1; });
    add("shallow_minor_ltw", {"r", "l"}, "(4r+1)l", [](const Params& p) { return (4 * p.at("r") + 1) * p.at("l"); });
    add("product_tw", {"w", "n"}, "(w+1)n-1", [](const Params& p) { return (p.at("w") + 1) * p.at("n") - 1; });
    add("convex_kplanar", {"Delta"}, "2Delta^2", [](const Params& p) { return 2 * p.at("Delta") * p.at("Delta"); });
    add("kplanar_rtw", {"k"}, "6(k+1)^2 C(k+4,3)-1", [](const Params& p) {
      const BigInt& k = p.at("k");
      return 6 * (k + 1) * (k + 1) * binomial(k + 4, 3) - 1;
    });
    add("convex_rtw", {"Delta"}, "6(2Delta^2+1)^2 C(2Delta^2+4,3)-1", [](const Params& p) {
      const BigInt k = 2 * p.at("Delta") * p.at("Delta");
      return 6 * (k + 1) * (k + 1) * binomial(k + 4, 3) - 1;
    });
    return t;
  }();
  return table;
}

}  // namespace

BigInt binomial(const BigInt& n, int k) {
  if (k < 0 || n < k) return 0;
  BigInt out = 1;
  for (int i = 0; i < k; ++i) out = out * (n - i) / (i + 1);
  return out;
}

const std::vector<BoundFormula>& bound_catalogue() {
  static const std::vector<BoundFormula> list = [] {
    std::vector<BoundFormula> out;
    for (const auto& e : entries()) out.push_back(e.formula);
    return out;
  }();
  return list;
}

BigInt evaluate_bound(const std::string& id, const std::map<std::string, BigInt>& params) {
  for (const auto& e : entries()) {
    if (e.formula.id != id) continue;
    for (const auto& name : e.formula.params) {
      const auto it = params.find(name);
      if (it == params.end()) throw InputError("bound " + id + " needs parameter " + name);
      if (it->second < 0) throw InputError("parameter " + name + " must be non-negative");
    }
    for (const auto& [name, value] : params) {
      if (std::find(e.formula.params.begin(), e.formula.params.end(), name) == e.formula.params.end()) {
        throw InputError("bound " + id + " takes no parameter " + name);
      }
    }
    return e.eval(params);
  }
  throw InputError("unknown theorem id " + id);
}

}  // namespace strandkit
