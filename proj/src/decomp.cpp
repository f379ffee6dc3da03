#include "strandkit/decomp.hpp"

#include "strandkit/arrangement.hpp"
#include "strandkit/error.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>

namespace strandkit {

int TreeDecomposition::width() const {
  int w = -1;
  for (const auto& b : bags) w = std::max(w, static_cast<int>(b.size()) - 1);
  return w;
}

int Layering::num_layers() const {
  int m = -1;
  for (int l : layer_of) m = std::max(m, l);
  return m + 1;
}

namespace {

struct Dsu {
  std::vector<int> parent;
  explicit Dsu(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (b < a) std::swap(a, b);
    parent[static_cast<std::size_t>(b)] = a;
    return true;
  }
};

void sort_bags(TreeDecomposition& td) {
  for (auto& b : td.bags) {
    std::sort(b.begin(), b.end());
    b.erase(std::unique(b.begin(), b.end()), b.end());
  }
}

}  // namespace

TdReport verify_td(const TreeDecomposition& td, const Graph& g) {
  TdReport rep;
  rep.width = td.width();
  auto fail = [&](std::string why) {
    rep.valid = false;
    rep.reason = std::move(why);
    return rep;
  };
  const int nb = static_cast<int>(td.bags.size());
  const int n = g.num_vertices();
  if (nb == 0) return n == 0 ? rep : fail("no bags");
  if (static_cast<int>(td.tree_edges.size()) != nb - 1) return fail("tree has wrong number of edges");
  Dsu tree(static_cast<std::size_t>(nb));
  for (auto [a, b] : td.tree_edges) {
    if (a < 0 || b < 0 || a >= nb || b >= nb) return fail("tree edge out of range");
    if (!tree.unite(a, b)) return fail("tree has a cycle");
  }
  std::vector<std::vector<int>> holders(static_cast<std::size_t>(n));
  std::vector<std::set<int>> bag_sets;
  for (int i = 0; i < nb; ++i) {
    bag_sets.emplace_back(td.bags[static_cast<std::size_t>(i)].begin(), td.bags[static_cast<std::size_t>(i)].end());
    for (int v : bag_sets.back()) {
      if (v < 0 || v >= n) return fail("bag " + std::to_string(i) + " holds unknown vertex " + std::to_string(v));
      holders[static_cast<std::size_t>(v)].push_back(i);
    }
  }
  for (int v = 0; v < n; ++v) {
    if (holders[static_cast<std::size_t>(v)].empty()) return fail("vertex " + std::to_string(v) + " in no bag");
  }
  for (auto [u, v] : g.edges()) {
    bool covered = false;
    for (int i : holders[static_cast<std::size_t>(u)]) covered = covered || bag_sets[static_cast<std::size_t>(i)].contains(v);
    if (!covered) return fail("edge " + std::to_string(u) + "-" + std::to_string(v) + " in no bag");
  }
  std::vector<int> inside(static_cast<std::size_t>(n), 0);
  for (auto [a, b] : td.tree_edges) {
    for (int v : bag_sets[static_cast<std::size_t>(a)]) {
      if (bag_sets[static_cast<std::size_t>(b)].contains(v)) ++inside[static_cast<std::size_t>(v)];
    }
  }
  for (int v = 0; v < n; ++v) {
    if (inside[static_cast<std::size_t>(v)] != static_cast<int>(holders[static_cast<std::size_t>(v)].size()) - 1) {
      return fail("bags of vertex " + std::to_string(v) + " are not connected in the tree");
    }
  }
  return rep;
}

bool verify_layering(const Layering& layering, const Graph& g) {
  if (static_cast<int>(layering.layer_of.size()) != g.num_vertices()) return false;
  for (int l : layering.layer_of) {
    if (l < 0) return false;
  }
  for (auto [u, v] : g.edges()) {
    if (std::abs(layering.layer_of[static_cast<std::size_t>(u)] - layering.layer_of[static_cast<std::size_t>(v)]) > 1) {
      return false;
    }
  }
  return true;
}

int layered_width(const TreeDecomposition& td, const Layering& layering) {
  int best = 0;
  for (const auto& b : td.bags) {
    std::map<int, int> count;
    for (int v : b) best = std::max(best, ++count[layering.layer_of[static_cast<std::size_t>(v)]]);
  }
  return best;
}

ExactTreewidth exact_treewidth(const Graph& g) {
  const int n = g.num_vertices();
  if (n > 16) throw InputError("exact treewidth is limited to 16 vertices, got " + std::to_string(n));
  ExactTreewidth out;
  if (n == 0) return out;
  using Mask = std::uint32_t;
  std::vector<Mask> adj(static_cast<std::size_t>(n), 0);
  for (auto [u, v] : g.edges()) {
    adj[static_cast<std::size_t>(u)] |= Mask{1} << v;
    adj[static_cast<std::size_t>(v)] |= Mask{1} << u;
  }
  // q(S, v): vertices outside S ∪ {v} reachable from v through S
  auto q = [&](Mask s, int v) {
    Mask seen = Mask{1} << v;
    Mask frontier = seen;
    Mask out_set = 0;
    while (frontier) {
      Mask next = 0;
      for (Mask f = frontier; f; f &= f - 1) next |= adj[static_cast<std::size_t>(std::countr_zero(f))];
      next &= ~seen;
      seen |= next;
      out_set |= next & ~s;
      frontier = next & s;
    }
    return std::popcount(out_set);
  };
  const Mask full = (n == 32) ? ~Mask{0} : ((Mask{1} << n) - 1);
  std::vector<std::int8_t> tw(static_cast<std::size_t>(full) + 1, 0);
  std::vector<std::int8_t> last(static_cast<std::size_t>(full) + 1, -1);
  tw[0] = -1;
  for (Mask s = 1; s <= full; ++s) {
    int best = 127;
    int arg = -1;
    for (Mask rest = s; rest; rest &= rest - 1) {
      const int v = std::countr_zero(rest);
      const Mask without = s & ~(Mask{1} << v);
      const int cand = std::max<int>(tw[without], q(without, v));
      if (cand < best) {
        best = cand;
        arg = v;
      }
    }
    tw[s] = static_cast<std::int8_t>(best);
    last[s] = static_cast<std::int8_t>(arg);
    if (s == full) break;
  }
  out.width = tw[full];

  std::vector<int> order;
  for (Mask s = full; s; s &= ~(Mask{1} << last[s])) order.push_back(last[s]);
  std::reverse(order.begin(), order.end());
  std::vector<int> pos(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) pos[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] = i;
  std::vector<std::set<int>> fill(static_cast<std::size_t>(n));
  for (auto [u, v] : g.edges()) {
    fill[static_cast<std::size_t>(u)].insert(v);
    fill[static_cast<std::size_t>(v)].insert(u);
  }
  auto& td = out.witness;
  std::vector<int> bag_of(static_cast<std::size_t>(n));
  std::vector<int> parent_vertex(static_cast<std::size_t>(n), -1);
  for (int i = 0; i < n; ++i) {
    const int v = order[static_cast<std::size_t>(i)];
    std::vector<int> later;
    for (int w : fill[static_cast<std::size_t>(v)]) {
      if (pos[static_cast<std::size_t>(w)] > i) later.push_back(w);
    }
    for (int a : later) {
      for (int b : later) {
        if (a != b) fill[static_cast<std::size_t>(a)].insert(b);
      }
    }
    std::vector<int> bag = later;
    bag.push_back(v);
    bag_of[static_cast<std::size_t>(v)] = static_cast<int>(td.bags.size());
    td.bags.push_back(bag);
    int first = -1;
    for (int w : later) {
      if (first < 0 || pos[static_cast<std::size_t>(w)] < pos[static_cast<std::size_t>(first)]) first = w;
    }
    parent_vertex[static_cast<std::size_t>(v)] = first;
  }
  int previous_root = -1;
  for (int v : order) {
    const int p = parent_vertex[static_cast<std::size_t>(v)];
    if (p >= 0) {
      td.tree_edges.emplace_back(bag_of[static_cast<std::size_t>(v)], bag_of[static_cast<std::size_t>(p)]);
    } else {
      if (previous_root >= 0) td.tree_edges.emplace_back(previous_root, bag_of[static_cast<std::size_t>(v)]);
      previous_root = bag_of[static_cast<std::size_t>(v)];
    }
  }
  sort_bags(td);
  return out;
}

Layering bfs_layering(const Graph& g, std::span<const int> roots) {
  if (roots.empty()) throw InputError("layering needs at least one root");
  Layering l;
  l.layer_of = bfs_distances(g, roots);
  for (std::size_t v = 0; v < l.layer_of.size(); ++v) {
    if (l.layer_of[v] == kUnreachable) throw InputError("vertex " + std::to_string(v) + " unreachable from the roots");
  }
  return l;
}

TreeDecomposition radius_decomposition(const EmbeddedGraph& plane, int root) {
  const int n = plane.num_vertices();
  if (root < 0 || root >= n) throw InputError("root out of range");
  TreeDecomposition td;
  EmbeddedGraph g = plane.simplified();
  if (!g.orient()) throw InputError("radius decomposition needs a planar embedding (non-orientable input)");
  if (g.euler_genus() != 0) throw InputError("radius decomposition needs a planar embedding (genus > 0)");
  const Graph simple = g.to_graph();
  const auto dist = bfs_distances(simple, root);
  for (int v = 0; v < n; ++v) {
    if (dist[static_cast<std::size_t>(v)] == kUnreachable) throw InputError("radius decomposition needs a connected graph");
  }
  if (n == 1) {
    td.bags.push_back({root});
    return td;
  }
  // BFS tree: parent = smallest neighbour one layer closer to the root
  std::vector<int> parent(static_cast<std::size_t>(n), -1);
  for (int v = 0; v < n; ++v) {
    if (v == root) continue;
    for (int w : simple.neighbours(v)) {
      if (dist[static_cast<std::size_t>(w)] + 1 == dist[static_cast<std::size_t>(v)]) {
        parent[static_cast<std::size_t>(v)] = w;
        break;
      }
    }
  }
  std::vector<bool> tree_edge(static_cast<std::size_t>(g.num_edges()), false);
  for (int e = 0; e < g.num_edges(); ++e) {
    const auto& ed = g.edge(e);
    tree_edge[static_cast<std::size_t>(e)] =
        parent[static_cast<std::size_t>(ed.u)] == ed.v || parent[static_cast<std::size_t>(ed.v)] == ed.u;
  }
  auto root_path = [&](int v, std::vector<int>& out) {
    for (; v >= 0; v = parent[static_cast<std::size_t>(v)]) out.push_back(v);
  };

  std::vector<int> sub_of_half(static_cast<std::size_t>(2 * g.num_edges()), -1);
  for (const auto& face : g.faces()) {
    const int m = static_cast<int>(face.size());
    std::vector<int> corner(face.size());
    for (std::size_t k = 0; k < face.size(); ++k) corner[k] = g.head(face[k]);
    const int start = static_cast<int>(std::min_element(corner.begin(), corner.end()) - corner.begin());
    std::vector<int> v(face.size());
    std::vector<int> h(face.size());
    for (int k = 0; k < m; ++k) {
      v[static_cast<std::size_t>(k)] = corner[static_cast<std::size_t>((start + k) % m)];
      h[static_cast<std::size_t>(k)] = face[static_cast<std::size_t>((start + k) % m)];
    }
    const int subs = std::max(1, m - 2);
    const int base = static_cast<int>(td.bags.size());
    for (int j = 0; j < subs; ++j) {
      std::vector<int> bag;
      if (m <= 3) {
        for (int x : v) root_path(x, bag);
      } else {
        for (int x : {v[0], v[static_cast<std::size_t>(j + 1)], v[static_cast<std::size_t>(j + 2)]}) root_path(x, bag);
      }
      td.bags.push_back(std::move(bag));
      if (j > 0) td.tree_edges.emplace_back(base + j - 1, base + j);
    }
    for (int k = 0; k < m; ++k) {
      const int j = std::clamp(k - 1, 0, subs - 1);
      sub_of_half[static_cast<std::size_t>(h[static_cast<std::size_t>(k)])] = base + j;
    }
  }
  for (int e = 0; e < g.num_edges(); ++e) {
    if (tree_edge[static_cast<std::size_t>(e)]) continue;
    const int a = sub_of_half[static_cast<std::size_t>(2 * e)];
    const int b = sub_of_half[static_cast<std::size_t>(2 * e + 1)];
    if (a == b) throw CheckFailure("radius decomposition: non-tree edge bounds a single subface");
    td.tree_edges.emplace_back(a, b);
  }
  sort_bags(td);
  const auto rep = verify_td(td, simple);
  if (!rep.valid) throw CheckFailure("radius decomposition produced an invalid decomposition: " + rep.reason);
  const int ecc = eccentricity(simple, root);
  if (rep.width > 3 * ecc + 1) {
    throw CheckFailure("radius decomposition width " + std::to_string(rep.width) + " exceeds 3r + 1 = " +
                       std::to_string(3 * ecc + 1));
  }
  return td;
}

TreeDecomposition product_lift(const TreeDecomposition& td, int n) {
  if (n < 1) throw InputError("product lift needs n >= 1");
  TreeDecomposition out;
  out.tree_edges = td.tree_edges;
  for (const auto& b : td.bags) {
    std::vector<int> nb;
    for (int x : b)
      for (int c = 0; c < n; ++c) nb.push_back(x * n + c);
    out.bags.push_back(std::move(nb));
  }
  sort_bags(out);
  return out;
}

TreeDecomposition product_project(const TreeDecomposition& td, int n) {
  TreeDecomposition out;
  out.tree_edges = td.tree_edges;
  for (const auto& b : td.bags) {
    std::vector<int> nb;
    for (int x : b) nb.push_back(x / n);
    out.bags.push_back(std::move(nb));
  }
  sort_bags(out);
  return out;
}

TreeDecomposition minor_lift(const TreeDecomposition& td, const MinorModel& model) {
  std::vector<int> owner(static_cast<std::size_t>(model.host.num_vertices()), -1);
  for (std::size_t v = 0; v < model.branch_sets.size(); ++v) {
    for (int x : model.branch_sets[v]) owner[static_cast<std::size_t>(x)] = static_cast<int>(v);
  }
  TreeDecomposition out;
  out.tree_edges = td.tree_edges;
  for (const auto& b : td.bags) {
    std::vector<int> nb;
    for (int x : b) {
      if (owner[static_cast<std::size_t>(x)] >= 0) nb.push_back(owner[static_cast<std::size_t>(x)]);
    }
    out.bags.push_back(std::move(nb));
  }
  sort_bags(out);
  return out;
}

TreeDecomposition restrict_td(const TreeDecomposition& td, const std::vector<int>& new_id) {
  TreeDecomposition out;
  out.tree_edges = td.tree_edges;
  for (const auto& b : td.bags) {
    std::vector<int> nb;
    for (int x : b) {
      if (new_id[static_cast<std::size_t>(x)] >= 0) nb.push_back(new_id[static_cast<std::size_t>(x)]);
    }
    out.bags.push_back(std::move(nb));
  }
  sort_bags(out);
  return out;
}

TreeDecomposition attach_singletons(TreeDecomposition td, const std::vector<int>& vertices) {
  for (int v : vertices) {
    const int id = static_cast<int>(td.bags.size());
    td.bags.push_back({v});
    if (id > 0) td.tree_edges.emplace_back(0, id);
  }
  return td;
}

MergeReport merge_layers(const TreeDecomposition& td, const Layering& layering) {
  MergeReport rep;
  rep.layers = layering.num_layers();
  rep.layered_width = layered_width(td, layering);
  rep.implied_bound = rep.layers * rep.layered_width - 1;
  return rep;
}

namespace {

struct GroundedSetup {
  StringScene stripped;
  Arrangement arrangement;
  Planarisation planarisation;
  IntersectionGraph graph;        // of the stripped scene
  std::vector<int> isolated;      // full-graph indices of curves crossing nothing
  std::vector<int> to_full;       // stripped index -> full index
  IntersectionGraph full_graph;
  OrderedColouring colouring;
  ColouringParams params;
  ColouredPlanarisation cp;
  EmbeddedGraph reduced;          // C^phi_0
  std::vector<int> cp_to_reduced;
  std::vector<int> centres;       // one per disk carrying a remaining curve
};

GroundedSetup grounded_setup(const StringScene& scene, const std::optional<OrderedColouring>& colouring) {
  for (const Curve& c : scene.curves) {
    if (!c.grounded) throw InputError("curve " + std::to_string(c.id) + " is not grounded");
  }
  GroundedSetup s;
  const Arrangement full = compute_arrangement(scene);
  s.full_graph = intersection_graph(full);
  s.stripped = strip_isolated(scene, full);
  for (const Curve& c : scene.curves) {
    if (full.events_on(c.id).empty()) s.isolated.push_back(s.full_graph.index_of(c.id));
  }
  s.arrangement = compute_arrangement(s.stripped);
  s.graph = intersection_graph(s.arrangement);
  for (CurveId c : s.graph.ids) s.to_full.push_back(s.full_graph.index_of(c));
  if (colouring) {
    s.colouring.t = colouring->t;
    for (CurveId c : s.graph.ids) s.colouring.phi[c] = (*colouring)(c);
  } else {
    s.colouring = default_colouring(s.graph);
  }
  if (s.graph.ids.empty()) return s;
  s.params = compute_params(s.arrangement, s.colouring);
  s.planarisation = planarise(s.arrangement);
  s.cp = coloured_planarisation(s.planarisation, s.colouring);

  std::vector<std::vector<int>> groups;
  std::set<int> kept;
  for (const Disk& d : s.stripped.disks) {
    std::vector<int> group;
    for (const auto& [c, end] : boundary_order(s.stripped, d.id)) {
      group.push_back(s.cp.psi[static_cast<std::size_t>(s.planarisation.endpoint(c, end))]);
    }
    for (int x : group) kept.insert(x);
    if (!group.empty()) groups.push_back(std::move(group));
  }
  std::vector<int> drop;
  for (int x = 0; x < s.cp.num_endpoints; ++x) {
    if (!kept.contains(x)) drop.push_back(x);
  }
  const auto removed = s.cp.graph.remove_vertices(drop);
  for (auto& group : groups)
    for (int& x : group) x = removed.vertex_map[static_cast<std::size_t>(x)];
  const auto merged = removed.graph.identify(groups);
  s.reduced = merged.graph;
  s.cp_to_reduced.resize(s.cp.psi.empty() ? 0 : static_cast<std::size_t>(s.cp.graph.num_vertices()));
  for (int x = 0; x < s.cp.graph.num_vertices(); ++x) {
    const int r = removed.vertex_map[static_cast<std::size_t>(x)];
    s.cp_to_reduced[static_cast<std::size_t>(x)] = r < 0 ? -1 : merged.vertex_map[static_cast<std::size_t>(r)];
  }
  const int first_centre = s.reduced.num_vertices() - static_cast<int>(groups.size());
  for (int i = first_centre; i < s.reduced.num_vertices(); ++i) s.centres.push_back(i);
  return s;
}

BigInt outerstring_bound(int t, int d) { return BigInt(3 * t - 1) * (d + 1) - 1; }

}  // namespace

OuterstringResult outerstring_decomposition(const StringScene& scene, const std::optional<OrderedColouring>& colouring) {
  if (scene.disks.size() != 1) throw InputError("outerstring decomposition needs exactly one disk");
  GroundedSetup s = grounded_setup(scene, colouring);
  OuterstringResult out;
  out.graph = s.full_graph;
  out.colouring = s.colouring;
  if (s.graph.ids.empty()) {
    out.t = std::max(1, s.colouring.t);
    out.td = attach_singletons({}, s.isolated);
    out.width = out.td.width();
    out.bound = outerstring_bound(out.t, 0);
    return out;
  }
  out.t = s.params.t;
  out.d = s.params.d;
  out.bound = outerstring_bound(out.t, out.d);
  const int w = s.centres.at(0);
  const Graph reduced = s.reduced.to_graph();
  out.eccentricity = eccentricity(reduced, w);
  if (out.eccentricity == kUnreachable || out.eccentricity > out.t - 1) {
    throw CheckFailure("eccentricity of the contracted disk is " + std::to_string(out.eccentricity) +
                       ", above t - 1 = " + std::to_string(out.t - 1));
  }
  EmbeddedGraph oriented = s.reduced;
  if (!oriented.orient() || oriented.euler_genus() != 0) {
    throw InputError("outerstring decomposition needs a planar representation (genus > 0)");
  }
  const TreeDecomposition td0 = radius_decomposition(s.reduced, w);
  out.host_width = td0.width();

  std::vector<int> reduced_to_host(static_cast<std::size_t>(s.reduced.num_vertices()), -1);
  for (int x = s.cp.num_endpoints; x < s.cp.graph.num_vertices(); ++x) {
    reduced_to_host[static_cast<std::size_t>(s.cp_to_reduced[static_cast<std::size_t>(x)])] = host_index(s.cp, x);
  }
  const TreeDecomposition host_td = restrict_td(td0, reduced_to_host);
  const ProductModel model = build_model(s.cp, s.graph, out.d);
  const MinorModel flat = model.flatten();
  const auto model_rep = verify_model(flat, s.graph.graph);
  if (!model_rep.valid) throw CheckFailure("product model invalid: " + model_rep.violated_clause);
  const TreeDecomposition lifted = minor_lift(product_lift(host_td, out.d + 1), flat);
  out.td = attach_singletons(restrict_td(lifted, s.to_full), s.isolated);
  const auto rep = verify_td(out.td, out.graph.graph);
  if (!rep.valid) throw CheckFailure("outerstring decomposition invalid: " + rep.reason);
  out.width = rep.width;
  if (BigInt(out.width) > out.bound) {
    throw CheckFailure("outerstring width " + std::to_string(out.width) + " exceeds bound " + out.bound.str());
  }
  return out;
}

GcOuterstringReport gc_outerstring_report(const StringScene& scene, const std::optional<OrderedColouring>& colouring) {
  GroundedSetup s = grounded_setup(scene, colouring);
  GcOuterstringReport rep;
  rep.c = static_cast<int>(scene.disks.size());
  if (s.graph.ids.empty()) {
    rep.t = std::max(1, s.colouring.t);
  } else {
    rep.t = s.params.t;
    rep.d = s.params.d;
    const Graph reduced = s.reduced.to_graph();
    const Layering layers = bfs_layering(reduced, s.centres);
    rep.layers = layers.num_layers();
    rep.cover_radius = rep.layers - 1;
    if (rep.cover_radius > rep.t - 1) {
      throw CheckFailure("c-centre cover radius " + std::to_string(rep.cover_radius) + " exceeds t - 1");
    }
    rep.genus = s.reduced.euler_genus();
    EmbeddedGraph copy = s.reduced;
    rep.orientable = copy.orient();
  }
  rep.bound = BigInt(2 * rep.t - 1) * rep.c * (2 * rep.genus + 3) * (rep.d + 1) - 1;
  if (rep.genus == 0 && rep.c == 1) {
    rep.constructed = outerstring_decomposition(scene, colouring);
    if (BigInt(rep.constructed->width) > rep.bound) throw CheckFailure("constructed width exceeds the (g,c) bound");
  }
  return rep;
}

LtwResult ltw_lift(const ColouredPlanarisation& cp, const ProductModel& model, int r) {
  LtwResult out;
  const Graph& host = model.base;
  const int nh = host.num_vertices();
  std::vector<int> endpoints(static_cast<std::size_t>(cp.num_endpoints));
  std::iota(endpoints.begin(), endpoints.end(), 0);
  const EmbeddedGraph embedded = cp.graph.remove_vertices(endpoints).graph;

  const auto comp = component_labels(host);
  const int ncomp = nh == 0 ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
  TreeDecomposition host_td;
  Layering host_layers;
  host_layers.layer_of.assign(static_cast<std::size_t>(nh), 0);
  for (int k = 0; k < ncomp; ++k) {
    std::vector<int> others;
    std::vector<int> members;
    for (int h = 0; h < nh; ++h) (comp[static_cast<std::size_t>(h)] == k ? members : others).push_back(h);
    const auto sub = embedded.remove_vertices(others);
    const TreeDecomposition td = radius_decomposition(sub.graph, 0);
    const auto dist = bfs_distances(sub.graph.to_graph(), 0);
    for (std::size_t i = 0; i < members.size(); ++i) {
      host_layers.layer_of[static_cast<std::size_t>(members[i])] = dist[i];
    }
    const int base = static_cast<int>(host_td.bags.size());
    if (base > 0) host_td.tree_edges.emplace_back(0, base);
    for (const auto& b : td.bags) {
      std::vector<int> nb;
      for (int x : b) nb.push_back(members[static_cast<std::size_t>(x)]);
      host_td.bags.push_back(std::move(nb));
    }
    for (auto [a, b] : td.tree_edges) host_td.tree_edges.emplace_back(base + a, base + b);
  }
  out.host_layered_width = layered_width(host_td, host_layers);
  if (out.host_layered_width > 3) throw CheckFailure("host layered width above 3");

  const int copies = model.copies;
  const TreeDecomposition product_td = product_lift(host_td, copies);
  const MinorModel flat = model.flatten();
  out.td = minor_lift(product_td, flat);

  const int block = 2 * r + 1;
  out.layering.layer_of.assign(model.mu.size(), 0);
  for (std::size_t v = 0; v < model.mu.size(); ++v) {
    std::vector<int> proj;
    for (const auto& p : model.mu[v]) proj.push_back(p.host);
    int best_h = -1;
    int best_r = -1;
    const int k = comp[static_cast<std::size_t>(proj.front())];
    for (int h = 0; h < nh; ++h) {
      if (comp[static_cast<std::size_t>(h)] != k) continue;
      const auto dist = bfs_distances(host, h);
      int worst = 0;
      for (int x : proj) worst = std::max(worst, dist[static_cast<std::size_t>(x)]);
      if (best_r < 0 || worst < best_r) {
        best_r = worst;
        best_h = h;
      }
    }
    if (best_r > r) {
      throw CheckFailure("branch set of curve " + std::to_string(model.ids[v]) + " has weak radius " +
                         std::to_string(best_r) + " > r = " + std::to_string(r));
    }
    out.layering.layer_of[v] = host_layers.layer_of[static_cast<std::size_t>(best_h)] / block;
  }
  Graph g(static_cast<int>(model.mu.size()));
  {
    // edges of G recovered from the model: branch sets joined by a product edge
    std::vector<int> owner(static_cast<std::size_t>(flat.host.num_vertices()), -1);
    for (std::size_t v = 0; v < flat.branch_sets.size(); ++v)
      for (int x : flat.branch_sets[v]) owner[static_cast<std::size_t>(x)] = static_cast<int>(v);
    for (auto [a, b] : flat.host.edges()) {
      const int oa = owner[static_cast<std::size_t>(a)];
      const int ob = owner[static_cast<std::size_t>(b)];
      if (oa >= 0 && ob >= 0 && oa != ob) g.add_edge(oa, ob);
    }
  }
  const auto rep = verify_td(out.td, g);
  if (!rep.valid) throw CheckFailure("lifted decomposition invalid: " + rep.reason);
  if (!verify_layering(out.layering, g)) throw CheckFailure("lifted layering invalid");
  out.layered_width = layered_width(out.td, out.layering);
  out.bound = BigInt(3) * (4 * BigInt(r) + 1) * copies;
  if (BigInt(out.layered_width) > out.bound) throw CheckFailure("layered width exceeds 3(4r+1)(d+1)");
  return out;
}

std::string td_to_pace(const TreeDecomposition& td, int num_vertices) {
  std::string s = "s td " + std::to_string(td.bags.size()) + " " + std::to_string(td.width() + 1) + " " +
                  std::to_string(num_vertices) + "\n";
  for (std::size_t i = 0; i < td.bags.size(); ++i) {
    s += "b " + std::to_string(i + 1);
    for (int v : td.bags[i]) s += " " + std::to_string(v + 1);
    s += "\n";
  }
  for (auto [a, b] : td.tree_edges) s += std::to_string(a + 1) + " " + std::to_string(b + 1) + "\n";
  return s;
}

nlohmann::json td_to_json(const TreeDecomposition& td, int num_vertices) {
  nlohmann::json edges = nlohmann::json::array();
  for (auto [a, b] : td.tree_edges) edges.push_back({a, b});
  return {{"bags", td.bags}, {"tree_edges", edges}, {"width", td.width()}, {"num_vertices", num_vertices}};
}

}  // namespace strandkit
