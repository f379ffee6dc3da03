#include "strandkit/colouring.hpp"

#include "strandkit/error.hpp"

#include <algorithm>
#include <set>

namespace strandkit {

int OrderedColouring::operator()(CurveId c) const {
  auto it = phi.find(c);
  if (it == phi.end()) throw InputError("curve " + std::to_string(c) + " has no colour");
  return it->second;
}

OrderedColouring greedy_colouring(const IntersectionGraph& ig, const std::vector<int>& order) {
  const Graph& g = ig.graph;
  const int n = g.num_vertices();
  std::vector<int> seen(static_cast<std::size_t>(n), 0);
  for (int v : order) {
    if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)]++) throw InputError("order is not a permutation");
  }
  if (static_cast<int>(order.size()) != n) throw InputError("order is not a permutation");
  std::vector<int> colour(static_cast<std::size_t>(n), 0);
  OrderedColouring out;
  for (int v : order) {
    std::set<int> used;
    for (int w : g.neighbours(v)) used.insert(colour[static_cast<std::size_t>(w)]);
    int c = 1;
    while (used.contains(c)) ++c;
    colour[static_cast<std::size_t>(v)] = c;
    out.phi[ig.ids[static_cast<std::size_t>(v)]] = c;
    out.t = std::max(out.t, c);
  }
  return out;
}

std::vector<int> degeneracy_order(const Graph& g) {
  const int n = g.num_vertices();
  std::vector<int> deg(static_cast<std::size_t>(n));
  std::set<std::pair<int, int>> queue;
  for (int v = 0; v < n; ++v) {
    deg[static_cast<std::size_t>(v)] = g.degree(v);
    queue.emplace(g.degree(v), v);
  }
  std::vector<bool> gone(static_cast<std::size_t>(n), false);
  std::vector<int> order;
  while (!queue.empty()) {
    const int v = queue.begin()->second;
    queue.erase(queue.begin());
    gone[static_cast<std::size_t>(v)] = true;
    order.push_back(v);
    for (int w : g.neighbours(v)) {
      if (gone[static_cast<std::size_t>(w)]) continue;
      queue.erase({deg[static_cast<std::size_t>(w)], w});
      queue.emplace(--deg[static_cast<std::size_t>(w)], w);
    }
  }
  return order;
}

std::vector<int> back_degrees(const Graph& g, const std::vector<int>& order) {
  std::vector<int> pos(static_cast<std::size_t>(g.num_vertices()));
  for (std::size_t i = 0; i < order.size(); ++i) pos[static_cast<std::size_t>(order[i])] = static_cast<int>(i);
  std::vector<int> out(static_cast<std::size_t>(g.num_vertices()), 0);
  for (int v = 0; v < g.num_vertices(); ++v) {
    for (int w : g.neighbours(v)) {
      if (pos[static_cast<std::size_t>(w)] < pos[static_cast<std::size_t>(v)]) ++out[static_cast<std::size_t>(v)];
    }
  }
  return out;
}

OrderedColouring default_colouring(const IntersectionGraph& ig) {
  auto order = degeneracy_order(ig.graph);
  std::reverse(order.begin(), order.end());
  return greedy_colouring(ig, order);
}

void validate_colouring(const Arrangement& arrangement, const OrderedColouring& colouring) {
  for (CurveId c : arrangement.curves) {
    const int col = colouring(c);
    if (col < 1 || col > colouring.t) {
      throw InputError("curve " + std::to_string(c) + " has colour " + std::to_string(col) + " outside 1.." +
                       std::to_string(colouring.t));
    }
  }
  for (const CrossingEvent& e : arrangement.events) {
    if (colouring(e.curve_a) == colouring(e.curve_b)) {
      throw InputError("curves " + std::to_string(e.curve_a) + " and " + std::to_string(e.curve_b) +
                       " cross but share colour " + std::to_string(colouring(e.curve_a)));
    }
  }
}

BigInt distance_bound(int t, int k) {
  BigInt sum = 0;
  BigInt power = 1;
  for (int j = 0; j <= t - 2; ++j) {
    sum += power;
    power *= k;
  }
  return (2 * BigInt(k) + 1) * sum;
}

ColouringParams compute_params(const Arrangement& arrangement, const OrderedColouring& colouring) {
  validate_colouring(arrangement, colouring);
  ColouringParams p;
  p.t = colouring.t;
  for (CurveId c : arrangement.curves) {
    const int mine = colouring(c);
    std::set<CurveId> lower;
    std::set<CurveId> fragment;
    auto close_fragment = [&] {
      p.d = std::max(p.d, static_cast<int>(fragment.size()));
      fragment.clear();
    };
    for (int id : arrangement.events_on(c)) {
      const CurveId o = arrangement.events[static_cast<std::size_t>(id)].other(c);
      if (colouring(o) < mine) {
        lower.insert(o);
        close_fragment();
      } else {
        fragment.insert(o);
      }
    }
    close_fragment();
    p.k = std::max(p.k, static_cast<int>(lower.size()));
  }
  p.r = distance_bound(p.t, p.k);
  return p;
}

TdegReport verify_tdeg(const Graph& g, const std::vector<int>& colour, int d) {
  TdegReport rep;
  for (int v = 0; v < g.num_vertices(); ++v) {
    int higher = 0;
    for (int w : g.neighbours(v)) {
      if (colour[static_cast<std::size_t>(w)] == colour[static_cast<std::size_t>(v)]) {
        throw InputError("colouring is not proper at edge " + std::to_string(v) + "-" + std::to_string(w));
      }
      if (colour[static_cast<std::size_t>(w)] > colour[static_cast<std::size_t>(v)]) ++higher;
    }
    if (higher > d) {
      rep.holds = false;
      rep.counterexample = v;
      return rep;
    }
  }
  return rep;
}

OrderedColouring relabel(const OrderedColouring& colouring, const std::vector<int>& permutation) {
  std::map<int, int> mapped;
  for (const auto& [c, col] : colouring.phi) {
    if (permutation.empty()) {
      mapped[col] = col;
    } else {
      if (col < 1 || col > static_cast<int>(permutation.size())) throw InputError("permutation too short");
      mapped[col] = permutation[static_cast<std::size_t>(col - 1)];
    }
  }
  std::set<int> targets;
  for (const auto& [from, to] : mapped) targets.insert(to);
  if (targets.size() != mapped.size()) throw InputError("colour permutation is not injective");
  std::map<int, int> dense;
  for (int v : targets) dense.emplace(v, static_cast<int>(dense.size()) + 1);
  OrderedColouring out;
  for (const auto& [c, col] : colouring.phi) out.phi[c] = dense.at(mapped.at(col));
  out.t = static_cast<int>(dense.size());
  return out;
}

OrderedColouring colouring_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw InputError("colouring JSON must map curve ids to colours");
  OrderedColouring out;
  for (const auto& [k, v] : j.items()) {
    if (!v.is_number_integer()) throw InputError("colour of curve " + k + " must be an integer");
    const int col = v.get<int>();
    if (col < 1) throw InputError("colour of curve " + k + " must be at least 1");
    out.phi[std::stoi(k)] = col;
    out.t = std::max(out.t, col);
  }
  return out;
}

nlohmann::json colouring_to_json(const OrderedColouring& colouring) {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [c, col] : colouring.phi) j[std::to_string(c)] = col;
  return j;
}

nlohmann::json params_to_json(const ColouringParams& params) {
  return {{"t", params.t}, {"d", params.d}, {"k", params.k}, {"r", bigint_to_json(params.r)}};
}

}  // namespace strandkit
