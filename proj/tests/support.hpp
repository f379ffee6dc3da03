#pragma once

#include "strandkit/embedding.hpp"
#include "strandkit/geometry.hpp"
#include "strandkit/graph.hpp"
#include "strandkit/scene.hpp"

#include <json.hpp>

#include <algorithm>
#include <map>
#include <random>
#include <string>
#include <vector>

namespace testsupport {

using strandkit::Point;
using strandkit::Rational;

inline Point P(long x, long y) { return Point{Rational(x), Rational(y)}; }
inline Point P(Rational x, Rational y) { return Point{std::move(x), std::move(y)}; }

inline strandkit::StringScene scene_from(const std::string& text) {
  return strandkit::parse_scene(nlohmann::json::parse(text));
}

inline strandkit::StringScene fixture(const std::string& name) {
  return strandkit::load_scene(std::string(FIXTURE_DIR) + "/" + name);
}

// Segments as (x0, y0, x1, y1) integer tuples, one curve per segment.
inline strandkit::StringScene segments(const std::vector<std::array<long, 4>>& segs) {
  nlohmann::json j;
  j["curves"] = nlohmann::json::array();
  for (std::size_t i = 0; i < segs.size(); ++i) {
    const auto& s = segs[i];
    j["curves"].push_back({{"id", i}, {"points", {{s[0], s[1]}, {s[2], s[3]}}}});
  }
  return strandkit::parse_scene(j);
}

inline strandkit::StringScene plus_sign() { return segments({{-1, 0, 1, 0}, {0, -1, 0, 1}}); }

// Independent crossing count for two polylines: counts pairs of segments whose
// relative interiors meet in exactly one point, using Cramer's rule directly.
inline int brute_force_crossings(const std::vector<Point>& a, const std::vector<Point>& b) {
  int count = 0;
  for (std::size_t i = 0; i + 1 < a.size(); ++i) {
    for (std::size_t j = 0; j + 1 < b.size(); ++j) {
      const Rational rx = a[i + 1].x - a[i].x, ry = a[i + 1].y - a[i].y;
      const Rational sx = b[j + 1].x - b[j].x, sy = b[j + 1].y - b[j].y;
      const Rational den = rx * sy - ry * sx;
      if (den == 0) continue;
      const Rational qx = b[j].x - a[i].x, qy = b[j].y - a[i].y;
      const Rational t = (qx * sy - qy * sx) / den;
      const Rational u = (qx * ry - qy * rx) / den;
      if (t > 0 && t < 1 && u > 0 && u < 1) ++count;
    }
  }
  return count;
}

// Random polyline scene in a 1000-box with rational bends; no general
// position guarantee (callers skip degenerate draws).
inline nlohmann::json random_polylines(std::mt19937_64& rng, int curves, int max_bends) {
  std::uniform_int_distribution<long> coord(0, 1000);
  std::uniform_int_distribution<int> bends(0, max_bends);
  nlohmann::json j;
  j["curves"] = nlohmann::json::array();
  for (int c = 0; c < curves; ++c) {
    nlohmann::json pts = nlohmann::json::array();
    const int n = 2 + bends(rng);
    for (int k = 0; k < n; ++k) pts.push_back({coord(rng), coord(rng)});
    j["curves"].push_back({{"id", c}, {"points", pts}});
  }
  return j;
}

// Classical signed face tracing: states (half-edge, orientation); leaving a
// vertex after arriving with orientation +1 uses the rotation successor,
// with -1 the predecessor. Every face is traced once per orientation.
inline int traced_euler_genus(const strandkit::EmbeddedGraph& g) {
  const int halves = 2 * g.num_edges();
  std::vector<std::vector<bool>> seen(2, std::vector<bool>(static_cast<std::size_t>(halves), false));
  int orbits = 0;
  for (int s = 0; s < 2; ++s) {
    for (int h0 = 0; h0 < halves; ++h0) {
      if (seen[static_cast<std::size_t>(s)][static_cast<std::size_t>(h0)]) continue;
      ++orbits;
      int h = h0;
      int eps = s == 0 ? 1 : -1;
      while (!seen[eps > 0 ? 0 : 1][static_cast<std::size_t>(h)]) {
        seen[eps > 0 ? 0 : 1][static_cast<std::size_t>(h)] = true;
        const int arrive = strandkit::EmbeddedGraph::twin(h);
        eps *= g.edge(h >> 1).sign;
        h = eps > 0 ? g.rotation_successor(arrive) : g.rotation_predecessor(arrive);
      }
    }
  }
  const int faces = orbits / 2;
  // components via union-find on edges
  std::vector<int> parent(static_cast<std::size_t>(g.num_vertices()));
  for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    return x;
  };
  for (const auto& e : g.edges()) parent[static_cast<std::size_t>(find(e.u))] = find(e.v);
  int components = 0;
  int isolated = 0;
  for (int v = 0; v < g.num_vertices(); ++v) {
    if (find(v) == v) ++components;
    if (g.degree(v) == 0) ++isolated;
  }
  // an isolated vertex is a sphere with one face
  return 2 * components - g.num_vertices() + g.num_edges() - (faces + isolated);
}

// Tree decomposition check by explicit search: tree via BFS over bag
// adjacency, each vertex's bags reached from one of them without leaving them.
inline bool oracle_td_valid(const std::vector<std::vector<int>>& bags, const std::vector<std::pair<int, int>>& tree,
                            const strandkit::Graph& g) {
  const std::size_t nb = bags.size();
  if (nb == 0) return g.num_vertices() == 0;
  if (tree.size() + 1 != nb) return false;
  std::vector<std::vector<int>> adj(nb);
  for (auto [a, b] : tree) {
    adj[static_cast<std::size_t>(a)].push_back(b);
    adj[static_cast<std::size_t>(b)].push_back(a);
  }
  auto reach = [&](int start, auto&& allowed) {
    std::vector<bool> seen(nb, false);
    std::vector<int> stack{start};
    seen[static_cast<std::size_t>(start)] = true;
    std::size_t count = 0;
    while (!stack.empty()) {
      const int x = stack.back();
      stack.pop_back();
      ++count;
      for (int y : adj[static_cast<std::size_t>(x)]) {
        if (!seen[static_cast<std::size_t>(y)] && allowed(y)) {
          seen[static_cast<std::size_t>(y)] = true;
          stack.push_back(y);
        }
      }
    }
    return count;
  };
  if (reach(0, [](int) { return true; }) != nb) return false;
  auto holds = [&](int bag, int v) {
    const auto& b = bags[static_cast<std::size_t>(bag)];
    return std::find(b.begin(), b.end(), v) != b.end();
  };
  for (int v = 0; v < g.num_vertices(); ++v) {
    std::vector<int> with;
    for (std::size_t i = 0; i < nb; ++i)
      if (holds(static_cast<int>(i), v)) with.push_back(static_cast<int>(i));
    if (with.empty()) return false;
    if (reach(with[0], [&](int y) { return holds(y, v); }) != with.size()) return false;
  }
  for (auto [u, v] : g.edges()) {
    bool ok = false;
    for (std::size_t i = 0; i < nb && !ok; ++i) ok = holds(static_cast<int>(i), u) && holds(static_cast<int>(i), v);
    if (!ok) return false;
  }
  return true;
}

// Treewidth as min over all elimination orders of the max back-degree in the
// fill graph; factorial time, for tiny graphs only.
inline int brute_force_treewidth(const strandkit::Graph& g) {
  const int n = g.num_vertices();
  if (n == 0) return -1;
  std::vector<int> order(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;
  int best = n - 1;
  do {
    std::vector<std::vector<bool>> adj(static_cast<std::size_t>(n), std::vector<bool>(static_cast<std::size_t>(n), false));
    for (auto [u, v] : g.edges()) adj[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = adj[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] = true;
    std::vector<bool> gone(static_cast<std::size_t>(n), false);
    int width = 0;
    for (int x : order) {
      std::vector<int> nb;
      for (int y = 0; y < n; ++y)
        if (!gone[static_cast<std::size_t>(y)] && adj[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)]) nb.push_back(y);
      width = std::max(width, static_cast<int>(nb.size()));
      for (int a : nb)
        for (int b : nb)
          if (a != b) adj[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = true;
      gone[static_cast<std::size_t>(x)] = true;
    }
    best = std::min(best, width);
  } while (std::next_permutation(order.begin(), order.end()));
  return best;
}

}  // namespace testsupport
