#include "strandkit/product_model.hpp"

#include "strandkit/error.hpp"

#include <algorithm>
#include <queue>
#include <set>

namespace strandkit {

ModelReport verify_model(const MinorModel& model, const Graph& g) {
  ModelReport rep;
  auto fail = [&](const char* clause, std::string detail) {
    rep.valid = false;
    rep.violated_clause = clause;
    rep.detail = std::move(detail);
    return rep;
  };
  const int n = g.num_vertices();
  if (static_cast<int>(model.branch_sets.size()) != n) {
    return fail("non-empty", "model has " + std::to_string(model.branch_sets.size()) + " branch sets for " +
                                 std::to_string(n) + " vertices");
  }
  std::vector<int> owner(static_cast<std::size_t>(model.host.num_vertices()), -1);
  for (int v = 0; v < n; ++v) {
    const auto& b = model.branch_sets[static_cast<std::size_t>(v)];
    if (b.empty()) return fail("non-empty", "branch set of " + std::to_string(v) + " is empty");
    for (int x : b) {
      if (x < 0 || x >= model.host.num_vertices()) return fail("non-empty", "host vertex out of range");
      int& o = owner[static_cast<std::size_t>(x)];
      if (o == v) continue;
      if (o >= 0) {
        return fail("disjoint", "host vertex " + std::to_string(x) + " in branch sets " + std::to_string(o) +
                                    " and " + std::to_string(v));
      }
      o = v;
    }
  }
  for (int v = 0; v < n; ++v) {
    const auto& b = model.branch_sets[static_cast<std::size_t>(v)];
    std::set<int> reached{b.front()};
    std::queue<int> q;
    q.push(b.front());
    while (!q.empty()) {
      const int x = q.front();
      q.pop();
      for (int y : model.host.neighbours(x)) {
        if (owner[static_cast<std::size_t>(y)] == v && reached.insert(y).second) q.push(y);
      }
    }
    if (reached.size() != std::set<int>(b.begin(), b.end()).size()) {
      return fail("connected", "branch set of " + std::to_string(v) + " is not connected");
    }
  }
  for (auto [v, w] : g.edges()) {
    bool joined = false;
    for (int x : model.branch_sets[static_cast<std::size_t>(v)]) {
      for (int y : model.host.neighbours(x)) joined = joined || owner[static_cast<std::size_t>(y)] == w;
    }
    if (!joined) return fail("edge", "no host edge between branch sets " + std::to_string(v) + " and " + std::to_string(w));
  }
  return rep;
}

MinorModel ProductModel::flatten() const {
  MinorModel m;
  m.host = strong_product_with_clique(base, copies);
  for (const auto& b : mu) {
    std::vector<int> flat_set;
    for (const auto& p : b) flat_set.push_back(flat(p));
    m.branch_sets.push_back(std::move(flat_set));
  }
  return m;
}

ProductModel build_model(const ColouredPlanarisation& cp, const IntersectionGraph& ig, int d) {
  ProductModel model;
  model.base = host_graph(cp);
  model.copies = d + 1;
  model.ids = ig.ids;
  // B_x in increasing curve id order, since ig.ids is sorted
  std::vector<std::vector<int>> on_vertex(static_cast<std::size_t>(model.base.num_vertices()));
  for (std::size_t v = 0; v < ig.ids.size(); ++v) {
    std::set<int> seen;
    for (int x : cp.walks.at(ig.ids[v])) {
      if (!cp.is_endpoint(x) && seen.insert(x).second) {
        on_vertex[static_cast<std::size_t>(host_index(cp, x))].push_back(static_cast<int>(v));
      }
    }
  }
  model.mu.resize(ig.ids.size());
  for (std::size_t h = 0; h < on_vertex.size(); ++h) {
    const auto& b = on_vertex[h];
    if (static_cast<int>(b.size()) > model.copies) {
      throw CheckFailure("parameter d understated at vertex " + std::to_string(cp_index(cp, static_cast<int>(h))) +
                         ": " + std::to_string(b.size()) + " walks share it, d + 1 = " + std::to_string(model.copies));
    }
    for (std::size_t i = 0; i < b.size(); ++i) {
      model.mu[static_cast<std::size_t>(b[i])].push_back({static_cast<int>(h), static_cast<int>(i) + 1});
    }
  }
  return model;
}

void check_projection(const ProductModel& model, const ColouredPlanarisation& cp) {
  for (std::size_t v = 0; v < model.ids.size(); ++v) {
    std::set<int> projected;
    for (const auto& p : model.mu[v]) projected.insert(cp_index(cp, p.host));
    std::set<int> walk;
    for (int x : cp.walks.at(model.ids[v])) {
      if (!cp.is_endpoint(x)) walk.insert(x);
    }
    if (projected != walk) {
      throw CheckFailure("projection of the branch set of curve " + std::to_string(model.ids[v]) +
                         " differs from its walk");
    }
  }
}

WalkDistances walk_weak_diameter(const ColouredPlanarisation& cp, const BigInt& bound) {
  const Graph full = cp.graph.to_graph();
  const Graph host = host_graph(cp);
  WalkDistances out;
  std::vector<std::vector<int>> host_dist(static_cast<std::size_t>(host.num_vertices()));
  for (int h = 0; h < host.num_vertices(); ++h) host_dist[static_cast<std::size_t>(h)] = bfs_distances(host, h);
  for (const auto& [c, walk] : cp.walks) {
    std::vector<int> members;
    for (int x : walk) {
      if (!cp.is_endpoint(x)) members.push_back(x);
    }
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    int diam = 0;
    int diam_host = 0;
    for (int x : members) {
      const auto dist = bfs_distances(full, x);
      const auto& hd = host_dist[static_cast<std::size_t>(host_index(cp, x))];
      for (int y : members) {
        const int dxy = dist[static_cast<std::size_t>(y)];
        if (BigInt(dxy) > bound) {
          throw CheckFailure("walk of curve " + std::to_string(c) + ": dist(" + std::to_string(x) + ", " +
                             std::to_string(y) + ") = " + std::to_string(dxy) + " exceeds " + bound.str());
        }
        diam = std::max(diam, dxy);
        diam_host = std::max(diam_host, hd[static_cast<std::size_t>(host_index(cp, y))]);
      }
    }
    int rad = -1;
    for (int h = 0; h < host.num_vertices(); ++h) {
      int worst = 0;
      for (int x : members) {
        const int dxh = host_dist[static_cast<std::size_t>(h)][static_cast<std::size_t>(host_index(cp, x))];
        worst = dxh == kUnreachable ? -1 : std::max(worst, dxh);
        if (worst < 0) break;
      }
      if (worst >= 0 && (rad < 0 || worst < rad)) rad = worst;
    }
    out.diameter[c] = diam;
    out.diameter_host[c] = diam_host;
    out.radius[c] = rad;
    out.max_diameter = std::max(out.max_diameter, diam);
    out.max_diameter_host = std::max(out.max_diameter_host, diam_host);
  }
  return out;
}

int grounded_distance_check(const Planarisation& p, const ColouredPlanarisation& cp,
                            const std::vector<std::pair<CurveId, CurveEnd>>& Y) {
  std::set<CurveId> grounded;
  std::vector<int> sources;
  for (const auto& [c, end] : Y) {
    grounded.insert(c);
    sources.push_back(cp.psi[static_cast<std::size_t>(p.endpoint(c, end))]);
  }
  for (CurveId c : p.curves) {
    if (!grounded.contains(c)) throw InputError("curve " + std::to_string(c) + " has no endpoint in Y");
  }
  const auto dist = bfs_distances(cp.graph.to_graph(), sources);
  int worst = 0;
  for (int x = cp.num_endpoints; x < cp.graph.num_vertices(); ++x) {
    const int dx = dist[static_cast<std::size_t>(x)];
    if (dx == kUnreachable) throw CheckFailure("vertex " + std::to_string(x) + " cannot reach Y");
    worst = std::max(worst, dx);
  }
  if (worst > cp.colouring.t - 1) {
    throw CheckFailure("distance " + std::to_string(worst) + " to Y exceeds t - 1 = " + std::to_string(cp.colouring.t - 1));
  }
  return worst;
}

nlohmann::json model_to_json(const ProductModel& model) {
  nlohmann::json j = nlohmann::json::object();
  for (std::size_t v = 0; v < model.ids.size(); ++v) {
    nlohmann::json list = nlohmann::json::array();
    for (const auto& p : model.mu[v]) list.push_back({p.host, p.copy});
    j[std::to_string(model.ids[v])] = std::move(list);
  }
  return j;
}

nlohmann::json model_report_to_json(const ModelReport& report) {
  nlohmann::json j{{"valid", report.valid}};
  if (!report.valid) {
    j["violated_clause"] = report.violated_clause;
    j["detail"] = report.detail;
  }
  return j;
}

}  // namespace strandkit
