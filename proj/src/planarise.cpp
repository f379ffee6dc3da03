#include "strandkit/planarise.hpp"

#include "strandkit/error.hpp"

#include <algorithm>
#include <set>

namespace strandkit {

int Planarisation::endpoint(CurveId c, CurveEnd end) const {
  auto it = std::lower_bound(curves.begin(), curves.end(), c);
  if (it == curves.end() || *it != c) throw InputError("unknown curve id " + std::to_string(c));
  return 2 * static_cast<int>(it - curves.begin()) + (end == CurveEnd::End ? 1 : 0);
}

int Planarisation::level(int v, const OrderedColouring& colouring) const {
  if (is_endpoint(v)) return 0;
  const CrossingEvent& e = arrangement.events[static_cast<std::size_t>(event_of[static_cast<std::size_t>(v)])];
  return std::min(colouring(e.curve_a), colouring(e.curve_b));
}

Planarisation planarise(const Arrangement& arrangement) {
  Planarisation p;
  p.arrangement = arrangement;
  p.curves = arrangement.curves;
  const int n = static_cast<int>(p.curves.size());
  const int total = 2 * n + static_cast<int>(arrangement.events.size());
  p.graph = EmbeddedGraph(total);
  p.kind.assign(static_cast<std::size_t>(total), VertexKind::Dummy);
  p.event_of.assign(static_cast<std::size_t>(total), -1);
  p.curve_of.assign(static_cast<std::size_t>(total), -1);
  for (int i = 0; i < n; ++i) {
    const CurveId c = p.curves[static_cast<std::size_t>(i)];
    if (arrangement.events_on(c).empty()) throw InputError("isolated curve " + std::to_string(c) + "; strip first");
    for (int v : {2 * i, 2 * i + 1}) {
      p.kind[static_cast<std::size_t>(v)] = VertexKind::Endpoint;
      p.curve_of[static_cast<std::size_t>(v)] = c;
    }
  }
  for (const CrossingEvent& e : arrangement.events) p.event_of[static_cast<std::size_t>(2 * n + e.id)] = e.id;

  for (int i = 0; i < n; ++i) {
    const CurveId c = p.curves[static_cast<std::size_t>(i)];
    auto& path = p.paths[c];
    path.push_back(2 * i);
    for (int e : arrangement.events_on(c)) path.push_back(2 * n + e);
    path.push_back(2 * i + 1);
    auto& edges = p.path_edges[c];
    for (std::size_t j = 0; j + 1 < path.size(); ++j) {
      const int sign = arrangement.twists.contains({c, static_cast<int>(j)}) ? -1 : 1;
      edges.push_back(p.graph.add_edge(path[j], path[j + 1], sign, c));
    }
    p.graph.set_rotation(2 * i, {2 * edges.front()});
    p.graph.set_rotation(2 * i + 1, {2 * edges.back() + 1});
  }
  for (const CrossingEvent& e : arrangement.events) {
    const auto& ea = p.path_edges.at(e.curve_a);
    const auto& eb = p.path_edges.at(e.curve_b);
    const int a_fwd = 2 * ea[static_cast<std::size_t>(e.index_in_a + 1)];
    const int a_back = 2 * ea[static_cast<std::size_t>(e.index_in_a)] + 1;
    const int b_fwd = 2 * eb[static_cast<std::size_t>(e.index_in_b + 1)];
    const int b_back = 2 * eb[static_cast<std::size_t>(e.index_in_b)] + 1;
    if (e.chirality > 0) {
      p.graph.set_rotation(2 * n + e.id, {a_fwd, b_fwd, a_back, b_back});
    } else {
      p.graph.set_rotation(2 * n + e.id, {a_fwd, b_back, a_back, b_fwd});
    }
  }
  p.graph.validate();
  return p;
}

std::vector<Fragment> fragments(const Planarisation& p, const OrderedColouring& colouring, CurveId curve) {
  auto it = p.paths.find(curve);
  if (it == p.paths.end()) throw InputError("unknown curve id " + std::to_string(curve));
  const auto& path = it->second;
  const int mine = colouring(curve);
  std::vector<Fragment> out;
  int first = 0;
  for (int k = 1; k + 1 < static_cast<int>(path.size()); ++k) {
    const CrossingEvent& e = p.arrangement.events[static_cast<std::size_t>(p.event_of[static_cast<std::size_t>(path[static_cast<std::size_t>(k)])])];
    if (colouring(e.other(curve)) < mine) {
      out.push_back({curve, first, k});
      first = k;
    }
  }
  out.push_back({curve, first, static_cast<int>(path.size()) - 1});
  return out;
}

std::vector<std::vector<int>> sections(const Planarisation& p, const OrderedColouring& colouring, CurveId curve) {
  const auto& path = p.paths.at(curve);
  std::vector<std::vector<int>> out;
  for (const Fragment& f : fragments(p, colouring, curve)) {
    if (f.last - f.first < 2) continue;
    out.emplace_back(path.begin() + f.first + 1, path.begin() + f.last);
  }
  return out;
}

ColouredPlanarisation coloured_planarisation(const Planarisation& p, const OrderedColouring& colouring) {
  validate_colouring(p.arrangement, colouring);
  ColouredPlanarisation cp;
  cp.colouring = colouring;
  cp.num_endpoints = p.num_endpoints();
  std::vector<int> to_contract;
  for (CurveId c : p.curves) {
    const auto& edges = p.path_edges.at(c);
    for (const Fragment& f : fragments(p, colouring, c)) {
      if (f.last - f.first < 2) continue;
      const auto& path = p.paths.at(c);
      cp.sections.emplace_back(path.begin() + f.first + 1, path.begin() + f.last);
      for (int k = f.first + 1; k + 1 < f.last; ++k) to_contract.push_back(edges[static_cast<std::size_t>(k)]);
    }
  }
  auto mapped = p.graph.contract(to_contract);
  cp.graph = std::move(mapped.graph);
  cp.psi = std::move(mapped.vertex_map);
  cp.level.assign(static_cast<std::size_t>(cp.graph.num_vertices()), -1);
  for (int v = 0; v < p.graph.num_vertices(); ++v) {
    cp.level[static_cast<std::size_t>(cp.psi[static_cast<std::size_t>(v)])] = p.level(v, colouring);
  }
  for (const auto& [c, path] : p.paths) {
    auto& walk = cp.walks[c];
    for (int v : path) {
      const int x = cp.psi[static_cast<std::size_t>(v)];
      if (walk.empty() || walk.back() != x) walk.push_back(x);
    }
  }
  return cp;
}

Graph host_graph(const ColouredPlanarisation& cp) {
  Graph h(cp.graph.num_vertices() - cp.num_endpoints);
  for (const auto& e : cp.graph.edges()) {
    if (cp.is_endpoint(e.u) || cp.is_endpoint(e.v)) continue;
    h.add_edge(host_index(cp, e.u), host_index(cp, e.v));
  }
  return h;
}

void check_planarisation(const Planarisation& p) {
  const EmbeddedGraph& g = p.graph;
  std::size_t expected_edges = 0;
  for (const auto& [c, path] : p.paths) {
    expected_edges += path.size() - 1;
    if (!p.is_endpoint(path.front()) || !p.is_endpoint(path.back())) {
      throw CheckFailure("path of curve " + std::to_string(c) + " does not end at endpoints");
    }
    for (std::size_t i = 1; i + 1 < path.size(); ++i) {
      if (p.is_endpoint(path[i])) throw CheckFailure("path of curve " + std::to_string(c) + " has an interior endpoint");
    }
    const auto& edges = p.path_edges.at(c);
    for (std::size_t i = 0; i < edges.size(); ++i) {
      const auto& e = g.edge(edges[i]);
      if (e.u != path[i] || e.v != path[i + 1] || e.tag != c) {
        throw CheckFailure("edge list of curve " + std::to_string(c) + " does not follow its path");
      }
    }
  }
  if (static_cast<std::size_t>(g.num_edges()) != expected_edges) throw CheckFailure("edge count mismatch");
  if (g.num_vertices() != p.num_endpoints() + static_cast<int>(p.arrangement.events.size())) {
    throw CheckFailure("vertex count mismatch");
  }
  for (int v = 0; v < g.num_vertices(); ++v) {
    const int want = p.is_endpoint(v) ? 1 : 4;
    if (g.degree(v) != want) throw CheckFailure("vertex " + std::to_string(v) + " has degree " + std::to_string(g.degree(v)));
    if (!p.is_endpoint(v)) {
      const auto rot = g.rotation(v);
      for (int i = 0; i < 4; ++i) {
        const int t0 = g.edge(rot[static_cast<std::size_t>(i)] >> 1).tag;
        const int t1 = g.edge(rot[static_cast<std::size_t>((i + 1) % 4)] >> 1).tag;
        if (t0 == t1) throw CheckFailure("rotation at dummy " + std::to_string(v) + " does not alternate curves");
      }
    }
  }
  g.validate();
}

void check_sections_disjoint(const ColouredPlanarisation& cp) {
  std::set<int> seen;
  for (const auto& s : cp.sections) {
    for (int v : s) {
      if (!seen.insert(v).second) throw CheckFailure("vertex " + std::to_string(v) + " lies in two sections");
    }
  }
}

void check_psi_partition(const Planarisation& p, const ColouredPlanarisation& cp) {
  const int n = cp.graph.num_vertices();
  std::vector<std::vector<int>> fibre(static_cast<std::size_t>(n));
  for (int v = 0; v < p.graph.num_vertices(); ++v) {
    const int x = cp.psi[static_cast<std::size_t>(v)];
    if (x < 0 || x >= n) throw CheckFailure("psi maps " + std::to_string(v) + " out of range");
    fibre[static_cast<std::size_t>(x)].push_back(v);
  }
  std::set<std::vector<int>> section_sets;
  for (auto s : cp.sections) {
    std::sort(s.begin(), s.end());
    section_sets.insert(s);
  }
  for (int x = 0; x < n; ++x) {
    const auto& f = fibre[static_cast<std::size_t>(x)];
    if (f.empty()) throw CheckFailure("psi is not surjective at " + std::to_string(x));
    if (cp.is_endpoint(x)) {
      if (f.size() != 1 || f[0] != x) throw CheckFailure("psi does not fix endpoint " + std::to_string(x));
      continue;
    }
    if (f.size() == 1 && p.is_endpoint(f[0])) throw CheckFailure("endpoint mapped off E_C");
    // a fibre is one section, or a single dummy lying in no section
    if (!section_sets.contains(f)) {
      bool in_section = false;
      for (const auto& s : cp.sections) in_section = in_section || std::find(s.begin(), s.end(), f[0]) != s.end();
      if (f.size() != 1 || in_section) {
        throw CheckFailure("psi fibre of " + std::to_string(x) + " is not a section");
      }
    }
  }
}

void check_unique_curve(const Planarisation& p, const ColouredPlanarisation& cp) {
  std::map<int, std::vector<CurveId>> owners;
  for (const auto& [c, walk] : cp.walks) {
    for (int x : walk) {
      if (cp.is_endpoint(x)) continue;
      if (cp.level[static_cast<std::size_t>(x)] == cp.colouring(c)) owners[x].push_back(c);
    }
  }
  for (int x = cp.num_endpoints; x < cp.graph.num_vertices(); ++x) {
    auto list = owners[x];
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
    if (list.size() != 1) {
      throw CheckFailure("vertex " + std::to_string(x) + " of C^phi has " + std::to_string(list.size()) +
                         " curves of its level through it");
    }
    const auto& path = p.paths.at(list[0]);
    for (int v = 0; v < p.graph.num_vertices(); ++v) {
      if (cp.psi[static_cast<std::size_t>(v)] == x && std::find(path.begin(), path.end(), v) == path.end()) {
        throw CheckFailure("psi fibre of " + std::to_string(x) + " leaves L of curve " + std::to_string(list[0]));
      }
    }
  }
}

void check_no_consecutive_level(const ColouredPlanarisation& cp) {
  for (const auto& [c, walk] : cp.walks) {
    const int mine = cp.colouring(c);
    for (std::size_t i = 0; i < walk.size(); ++i) {
      const int lv = cp.level[static_cast<std::size_t>(walk[i])];
      if (lv > mine) throw CheckFailure("walk of curve " + std::to_string(c) + " has a vertex above its colour");
      if (i + 1 < walk.size() && lv == mine && cp.level[static_cast<std::size_t>(walk[i + 1])] == mine) {
        throw CheckFailure("walk of curve " + std::to_string(c) + " has consecutive vertices of level " +
                           std::to_string(mine));
      }
    }
  }
}

namespace {

template <typename Visit>
void for_each_curve_pair(const ColouredPlanarisation& cp, const Arrangement& arrangement, Visit visit) {
  const IntersectionGraph ig = intersection_graph(arrangement);
  std::vector<std::set<int>> members;
  for (CurveId c : ig.ids) members.emplace_back(cp.walks.at(c).begin(), cp.walks.at(c).end());
  for (std::size_t i = 0; i < ig.ids.size(); ++i) {
    for (std::size_t j = i + 1; j < ig.ids.size(); ++j) {
      bool meet = false;
      for (int x : members[i]) meet = meet || members[j].contains(x);
      visit(ig.ids[i], ig.ids[j], meet, ig.graph.has_edge(static_cast<int>(i), static_cast<int>(j)));
    }
  }
}

}  // namespace

void check_walk_intersections(const ColouredPlanarisation& cp, const Arrangement& arrangement) {
  for_each_curve_pair(cp, arrangement, [](CurveId a, CurveId b, bool meet, bool cross) {
    if (cross && !meet) {
      throw CheckFailure("walks of curves " + std::to_string(a) + " and " + std::to_string(b) +
                         " are disjoint although the curves cross");
    }
  });
}

std::vector<std::pair<CurveId, CurveId>> walk_meetings_without_crossing(const ColouredPlanarisation& cp,
                                                                       const Arrangement& arrangement) {
  std::vector<std::pair<CurveId, CurveId>> out;
  for_each_curve_pair(cp, arrangement, [&](CurveId a, CurveId b, bool meet, bool cross) {
    if (meet && !cross) out.emplace_back(a, b);
  });
  return out;
}

}  // namespace strandkit
