#include "strandkit/embedding.hpp"

#include "strandkit/error.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

namespace strandkit {

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

int EmbeddedGraph::add_vertex() {
  rotation_.emplace_back();
  return num_vertices() - 1;
}

int EmbeddedGraph::add_edge(int u, int v, int sign, int tag) {
  edges_.push_back(Edge{u, v, sign, tag});
  position_.resize(edges_.size() * 2, -1);
  return num_edges() - 1;
}

void EmbeddedGraph::set_rotation(int v, std::vector<int> half_edges) {
  rotation_[static_cast<std::size_t>(v)] = std::move(half_edges);
  const auto& rot = rotation_[static_cast<std::size_t>(v)];
  for (std::size_t i = 0; i < rot.size(); ++i) position_[static_cast<std::size_t>(rot[i])] = static_cast<int>(i);
}

void EmbeddedGraph::rebuild_positions() {
  position_.assign(edges_.size() * 2, -1);
  for (const auto& rot : rotation_) {
    for (std::size_t i = 0; i < rot.size(); ++i) position_[static_cast<std::size_t>(rot[i])] = static_cast<int>(i);
  }
}

int EmbeddedGraph::head(int h) const {
  const Edge& e = edges_[static_cast<std::size_t>(h >> 1)];
  return (h & 1) ? e.v : e.u;
}

int EmbeddedGraph::rotation_successor(int h) const {
  const auto& rot = rotation_[static_cast<std::size_t>(head(h))];
  const auto pos = static_cast<std::size_t>(position_[static_cast<std::size_t>(h)]);
  return rot[(pos + 1) % rot.size()];
}

int EmbeddedGraph::rotation_predecessor(int h) const {
  const auto& rot = rotation_[static_cast<std::size_t>(head(h))];
  const auto pos = static_cast<std::size_t>(position_[static_cast<std::size_t>(h)]);
  return rot[(pos + rot.size() - 1) % rot.size()];
}

void EmbeddedGraph::validate() const {
  std::vector<int> seen(edges_.size() * 2, 0);
  for (int v = 0; v < num_vertices(); ++v) {
    for (int h : rotation(v)) {
      if (h < 0 || static_cast<std::size_t>(h) >= seen.size()) {
        throw CheckFailure("rotation at vertex " + std::to_string(v) + " names unknown half-edge");
      }
      if (head(h) != v) {
        throw CheckFailure("half-edge " + std::to_string(h) + " listed at wrong vertex " + std::to_string(v));
      }
      ++seen[static_cast<std::size_t>(h)];
    }
  }
  for (std::size_t h = 0; h < seen.size(); ++h) {
    if (seen[h] != 1) throw CheckFailure("half-edge " + std::to_string(h) + " not listed exactly once");
  }
}

namespace {

// Flag (h, s): s = 1 is the corner between h and its rotation successor,
// s = 0 the corner between its predecessor and h.
struct FlagSystem {
  const EmbeddedGraph& g;
  int alpha0(int f) const {
    const int h = f >> 1;
    const int s = f & 1;
    const int sign = g.edge(h >> 1).sign;
    const int s2 = sign > 0 ? 1 - s : s;
    return (EmbeddedGraph::twin(h) << 1) | s2;
  }
  int alpha1(int f) const {
    const int h = f >> 1;
    const int s = f & 1;
    if (s == 1) return g.rotation_successor(h) << 1;
    return (g.rotation_predecessor(h) << 1) | 1;
  }
  static int alpha2(int f) { return f ^ 1; }
};

}  // namespace

int EmbeddedGraph::num_faces() const {
  const std::size_t flags = edges_.size() * 4;
  DisjointSets faces(flags);
  const FlagSystem fs{*this};
  for (std::size_t f = 0; f < flags; ++f) {
    faces.unite(f, static_cast<std::size_t>(fs.alpha0(static_cast<int>(f))));
    faces.unite(f, static_cast<std::size_t>(fs.alpha1(static_cast<int>(f))));
  }
  int count = 0;
  for (std::size_t f = 0; f < flags; ++f) count += faces.find(f) == f;
  // Each isolated vertex bounds one face of its own sphere.
  for (int v = 0; v < num_vertices(); ++v) count += degree(v) == 0;
  return count;
}

int EmbeddedGraph::num_components() const {
  DisjointSets ds(static_cast<std::size_t>(num_vertices()));
  for (const Edge& e : edges_) ds.unite(static_cast<std::size_t>(e.u), static_cast<std::size_t>(e.v));
  int c = 0;
  for (int v = 0; v < num_vertices(); ++v) c += ds.find(static_cast<std::size_t>(v)) == static_cast<std::size_t>(v);
  return c;
}

int EmbeddedGraph::euler_genus() const {
  // Sum over components of 2 - V + E - F, i.e. 2C - V + E - F overall.
  return 2 * num_components() - num_vertices() + num_edges() - num_faces();
}

bool EmbeddedGraph::all_positive() const {
  return std::all_of(edges_.begin(), edges_.end(), [](const Edge& e) { return e.sign > 0; });
}

bool EmbeddedGraph::orient() {
  const int n = num_vertices();
  std::vector<int> flip(static_cast<std::size_t>(n), 0);
  std::vector<std::vector<int>> incident(static_cast<std::size_t>(n));
  for (int e = 0; e < num_edges(); ++e) {
    incident[static_cast<std::size_t>(edges_[static_cast<std::size_t>(e)].u)].push_back(e);
    incident[static_cast<std::size_t>(edges_[static_cast<std::size_t>(e)].v)].push_back(e);
  }
  for (int root = 0; root < n; ++root) {
    if (flip[static_cast<std::size_t>(root)] != 0) continue;
    flip[static_cast<std::size_t>(root)] = 1;
    std::vector<int> stack{root};
    while (!stack.empty()) {
      const int x = stack.back();
      stack.pop_back();
      for (int e : incident[static_cast<std::size_t>(x)]) {
        const Edge& ed = edges_[static_cast<std::size_t>(e)];
        const int y = ed.u == x ? ed.v : ed.u;
        if (flip[static_cast<std::size_t>(y)] == 0) {
          flip[static_cast<std::size_t>(y)] = ed.sign * flip[static_cast<std::size_t>(x)];
          stack.push_back(y);
        }
      }
    }
  }
  for (const Edge& e : edges_) {
    if (e.sign * flip[static_cast<std::size_t>(e.u)] * flip[static_cast<std::size_t>(e.v)] < 0) return false;
  }
  for (int v = 0; v < n; ++v) {
    if (flip[static_cast<std::size_t>(v)] < 0) {
      auto& rot = rotation_[static_cast<std::size_t>(v)];
      std::reverse(rot.begin(), rot.end());
    }
  }
  for (Edge& e : edges_) e.sign = 1;
  rebuild_positions();
  return true;
}

std::vector<std::vector<int>> EmbeddedGraph::faces() const {
  if (!all_positive()) throw CheckFailure("face walks requested on a non-oriented embedding");
  std::vector<bool> used(edges_.size() * 2, false);
  std::vector<std::vector<int>> out;
  for (std::size_t start = 0; start < used.size(); ++start) {
    if (used[start]) continue;
    std::vector<int> face;
    int h = static_cast<int>(start);
    while (!used[static_cast<std::size_t>(h)]) {
      used[static_cast<std::size_t>(h)] = true;
      face.push_back(h);
      h = rotation_successor(twin(h));
    }
    out.push_back(std::move(face));
  }
  return out;
}

EmbeddedGraph::Mapped EmbeddedGraph::contract(std::span<const int> edge_ids) const {
  const auto n = static_cast<std::size_t>(num_vertices());
  std::vector<Edge> edges = edges_;
  std::vector<std::vector<int>> rot = rotation_;
  std::vector<int> owner(edges.size() * 2);
  for (std::size_t h = 0; h < owner.size(); ++h) owner[h] = head(static_cast<int>(h));
  std::vector<bool> dropped(edges.size(), false);
  DisjointSets classes(n);

  for (int e : edge_ids) {
    int u = owner[static_cast<std::size_t>(2 * e)];
    int v = owner[static_cast<std::size_t>(2 * e + 1)];
    if (u == v) throw CheckFailure("contract: edge " + std::to_string(e) + " is a loop");
    int hu = 2 * e;
    int hv = 2 * e + 1;
    if (v < u) {
      std::swap(u, v);
      std::swap(hu, hv);
    }
    auto& rv = rot[static_cast<std::size_t>(v)];
    if (edges[static_cast<std::size_t>(e)].sign < 0) {
      std::reverse(rv.begin(), rv.end());
      for (int h : rv) edges[static_cast<std::size_t>(h >> 1)].sign *= -1;
    }
    auto& ru = rot[static_cast<std::size_t>(u)];
    auto cut = [](const std::vector<int>& r, int h) {
      const auto it = std::find(r.begin(), r.end(), h);
      std::vector<int> out(it + 1, r.end());
      out.insert(out.end(), r.begin(), it);
      return out;
    };
    std::vector<int> merged = cut(ru, hu);
    const std::vector<int> tail = cut(rv, hv);
    merged.insert(merged.end(), tail.begin(), tail.end());
    for (int h : tail) owner[static_cast<std::size_t>(h)] = u;
    ru = std::move(merged);
    rv.clear();
    dropped[static_cast<std::size_t>(e)] = true;
    classes.unite(static_cast<std::size_t>(u), static_cast<std::size_t>(v));
  }

  Mapped out;
  out.vertex_map.assign(n, -1);
  std::vector<int> new_id(n, -1);
  int next = 0;
  for (std::size_t v = 0; v < n; ++v) {
    if (classes.find(v) == v) new_id[v] = next++;
  }
  for (std::size_t v = 0; v < n; ++v) out.vertex_map[v] = new_id[classes.find(v)];

  EmbeddedGraph g(next);
  std::vector<int> new_edge(edges.size(), -1);
  for (std::size_t e = 0; e < edges.size(); ++e) {
    if (dropped[e]) continue;
    const Edge& ed = edges[e];
    new_edge[e] = g.add_edge(new_id[static_cast<std::size_t>(owner[2 * e])],
                             new_id[static_cast<std::size_t>(owner[2 * e + 1])], ed.sign, ed.tag);
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (new_id[v] < 0) continue;
    std::vector<int> r;
    for (int h : rot[v]) r.push_back(2 * new_edge[static_cast<std::size_t>(h >> 1)] + (h & 1));
    g.set_rotation(new_id[v], std::move(r));
  }
  out.graph = std::move(g);
  return out;
}

EmbeddedGraph::Mapped EmbeddedGraph::remove_vertices(std::span<const int> vertices) const {
  std::vector<bool> gone(static_cast<std::size_t>(num_vertices()), false);
  for (int v : vertices) gone[static_cast<std::size_t>(v)] = true;
  Mapped out;
  out.vertex_map.assign(static_cast<std::size_t>(num_vertices()), -1);
  int next = 0;
  for (int v = 0; v < num_vertices(); ++v) {
    if (!gone[static_cast<std::size_t>(v)]) out.vertex_map[static_cast<std::size_t>(v)] = next++;
  }
  EmbeddedGraph g(next);
  std::vector<int> new_edge(edges_.size(), -1);
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    const Edge& ed = edges_[e];
    if (gone[static_cast<std::size_t>(ed.u)] || gone[static_cast<std::size_t>(ed.v)]) continue;
    new_edge[e] = g.add_edge(out.vertex_map[static_cast<std::size_t>(ed.u)],
                             out.vertex_map[static_cast<std::size_t>(ed.v)], ed.sign, ed.tag);
  }
  for (int v = 0; v < num_vertices(); ++v) {
    if (gone[static_cast<std::size_t>(v)]) continue;
    std::vector<int> r;
    for (int h : rotation(v)) {
      const int ne = new_edge[static_cast<std::size_t>(h >> 1)];
      if (ne >= 0) r.push_back(2 * ne + (h & 1));
    }
    g.set_rotation(out.vertex_map[static_cast<std::size_t>(v)], std::move(r));
  }
  out.graph = std::move(g);
  return out;
}

EmbeddedGraph::Mapped EmbeddedGraph::identify(std::span<const std::vector<int>> groups) const {
  const auto n = static_cast<std::size_t>(num_vertices());
  std::vector<int> group_of(n, -1);
  for (std::size_t i = 0; i < groups.size(); ++i) {
    for (int v : groups[i]) {
      if (group_of[static_cast<std::size_t>(v)] >= 0) throw CheckFailure("identify: overlapping groups");
      group_of[static_cast<std::size_t>(v)] = static_cast<int>(i);
    }
  }
  Mapped out;
  out.vertex_map.assign(n, -1);
  int next = 0;
  for (std::size_t v = 0; v < n; ++v) {
    if (group_of[v] < 0) out.vertex_map[v] = next++;
  }
  const int first_group = next;
  for (std::size_t v = 0; v < n; ++v) {
    if (group_of[v] >= 0) out.vertex_map[v] = first_group + group_of[v];
  }
  EmbeddedGraph g(first_group + static_cast<int>(groups.size()));
  for (const Edge& ed : edges_) {
    g.add_edge(out.vertex_map[static_cast<std::size_t>(ed.u)], out.vertex_map[static_cast<std::size_t>(ed.v)],
               ed.sign, ed.tag);
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (group_of[v] < 0) g.set_rotation(out.vertex_map[v], rotation_[v]);
  }
  for (std::size_t i = 0; i < groups.size(); ++i) {
    std::vector<int> r;
    for (int v : groups[i]) {
      const auto& rv = rotation_[static_cast<std::size_t>(v)];
      r.insert(r.end(), rv.begin(), rv.end());
    }
    g.set_rotation(first_group + static_cast<int>(i), std::move(r));
  }
  out.graph = std::move(g);
  return out;
}

EmbeddedGraph EmbeddedGraph::simplified() const {
  std::set<std::pair<int, int>> seen;
  std::vector<int> new_edge(edges_.size(), -1);
  EmbeddedGraph g(num_vertices());
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    const Edge& ed = edges_[e];
    if (ed.u == ed.v) continue;
    if (!seen.insert({std::min(ed.u, ed.v), std::max(ed.u, ed.v)}).second) continue;
    new_edge[e] = g.add_edge(ed.u, ed.v, ed.sign, ed.tag);
  }
  for (int v = 0; v < num_vertices(); ++v) {
    std::vector<int> r;
    for (int h : rotation(v)) {
      const int ne = new_edge[static_cast<std::size_t>(h >> 1)];
      if (ne >= 0) r.push_back(2 * ne + (h & 1));
    }
    g.set_rotation(v, std::move(r));
  }
  return g;
}

Graph EmbeddedGraph::to_graph() const {
  Graph g(num_vertices());
  for (const Edge& e : edges_) g.add_edge(e.u, e.v);
  return g;
}

}  // namespace strandkit
