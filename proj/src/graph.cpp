#include "strandkit/graph.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

namespace strandkit {

int Graph::num_edges() const {
  std::size_t total = 0;
  for (const auto& a : adj_) total += a.size();
  return static_cast<int>(total / 2);
}

int Graph::add_vertex() {
  adj_.emplace_back();
  return num_vertices() - 1;
}

bool Graph::add_edge(int u, int v) {
  if (u == v) return false;
  if (u < 0 || v < 0 || u >= num_vertices() || v >= num_vertices()) {
    throw std::out_of_range("Graph::add_edge: vertex out of range");
  }
  auto& au = adj_[static_cast<std::size_t>(u)];
  auto it = std::lower_bound(au.begin(), au.end(), v);
  if (it != au.end() && *it == v) return false;
  au.insert(it, v);
  auto& av = adj_[static_cast<std::size_t>(v)];
  av.insert(std::lower_bound(av.begin(), av.end(), u), u);
  return true;
}

bool Graph::has_edge(int u, int v) const {
  const auto& au = adj_[static_cast<std::size_t>(u)];
  return std::binary_search(au.begin(), au.end(), v);
}

int Graph::max_degree() const {
  int best = 0;
  for (int v = 0; v < num_vertices(); ++v) best = std::max(best, degree(v));
  return best;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < num_vertices(); ++u) {
    for (int v : neighbours(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

std::vector<int> bfs_distances(const Graph& g, std::span<const int> sources) {
  std::vector<int> dist(static_cast<std::size_t>(g.num_vertices()), kUnreachable);
  std::deque<int> queue;
  for (int s : sources) {
    if (dist[static_cast<std::size_t>(s)] == kUnreachable) {
      dist[static_cast<std::size_t>(s)] = 0;
      queue.push_back(s);
    }
  }
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop_front();
    for (int w : g.neighbours(u)) {
      if (dist[static_cast<std::size_t>(w)] == kUnreachable) {
        dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(u)] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

std::vector<int> bfs_distances(const Graph& g, int source) {
  const int s[] = {source};
  return bfs_distances(g, s);
}

std::vector<int> component_labels(const Graph& g) {
  std::vector<int> label(static_cast<std::size_t>(g.num_vertices()), -1);
  int next = 0;
  for (int v = 0; v < g.num_vertices(); ++v) {
    if (label[static_cast<std::size_t>(v)] != -1) continue;
    for (int u = 0; const int d : bfs_distances(g, v)) {
      if (d != kUnreachable) label[static_cast<std::size_t>(u)] = next;
      ++u;
    }
    ++next;
  }
  return label;
}

bool is_connected(const Graph& g) {
  if (g.num_vertices() == 0) return true;
  const auto dist = bfs_distances(g, 0);
  return std::none_of(dist.begin(), dist.end(), [](int d) { return d == kUnreachable; });
}

int eccentricity(const Graph& g, int v) {
  int ecc = 0;
  for (int d : bfs_distances(g, v)) {
    if (d == kUnreachable) return kUnreachable;
    ecc = std::max(ecc, d);
  }
  return ecc;
}

int radius(const Graph& g) {
  if (g.num_vertices() == 0 || !is_connected(g)) return kUnreachable;
  int best = g.num_vertices();
  for (int v = 0; v < g.num_vertices(); ++v) best = std::min(best, eccentricity(g, v));
  return best;
}

Graph induced_subgraph(const Graph& g, std::span<const int> vertices) {
  std::vector<int> index(static_cast<std::size_t>(g.num_vertices()), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    index[static_cast<std::size_t>(vertices[i])] = static_cast<int>(i);
  }
  Graph h(static_cast<int>(vertices.size()));
  for (auto [u, v] : g.edges()) {
    const int iu = index[static_cast<std::size_t>(u)];
    const int iv = index[static_cast<std::size_t>(v)];
    if (iu >= 0 && iv >= 0) h.add_edge(iu, iv);
  }
  return h;
}

Graph strong_product_with_clique(const Graph& g, int n) {
  if (n < 1) throw std::invalid_argument("strong product needs n >= 1");
  Graph p(g.num_vertices() * n);
  for (int x = 0; x < g.num_vertices(); ++x) {
    for (int a = 0; a < n; ++a) {
      for (int b = a + 1; b < n; ++b) p.add_edge(x * n + a, x * n + b);
    }
  }
  for (auto [x, y] : g.edges()) {
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) p.add_edge(x * n + a, y * n + b);
    }
  }
  return p;
}

int degeneracy(const Graph& g) {
  const int n = g.num_vertices();
  std::vector<int> deg(static_cast<std::size_t>(n));
  std::set<std::pair<int, int>> queue;
  for (int v = 0; v < n; ++v) {
    deg[static_cast<std::size_t>(v)] = g.degree(v);
    queue.emplace(g.degree(v), v);
  }
  std::vector<bool> removed(static_cast<std::size_t>(n), false);
  int best = 0;
  while (!queue.empty()) {
    auto [d, v] = *queue.begin();
    queue.erase(queue.begin());
    best = std::max(best, d);
    removed[static_cast<std::size_t>(v)] = true;
    for (int w : g.neighbours(v)) {
      if (removed[static_cast<std::size_t>(w)]) continue;
      queue.erase({deg[static_cast<std::size_t>(w)], w});
      --deg[static_cast<std::size_t>(w)];
      queue.emplace(deg[static_cast<std::size_t>(w)], w);
    }
  }
  return best;
}

Graph path_graph(int n) {
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph cycle_graph(int n) {
  Graph g = path_graph(n);
  if (n >= 3) g.add_edge(n - 1, 0);
  return g;
}

Graph complete_graph(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  }
  return g;
}

Graph complete_bipartite(int a, int b) {
  Graph g(a + b);
  for (int i = 0; i < a; ++i) {
    for (int j = 0; j < b; ++j) g.add_edge(i, a + j);
  }
  return g;
}

Graph grid_graph(int rows, int cols) {
  Graph g(rows * cols);
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      if (c + 1 < cols) g.add_edge(r * cols + c, r * cols + c + 1);
      if (r + 1 < rows) g.add_edge(r * cols + c, (r + 1) * cols + c);
    }
  }
  return g;
}

Graph star_graph(int leaves) {
  Graph g(leaves + 1);
  for (int i = 1; i <= leaves; ++i) g.add_edge(0, i);
  return g;
}

Graph wheel_graph(int rim) {
  Graph g(rim + 1);
  for (int i = 0; i < rim; ++i) {
    g.add_edge(0, 1 + i);
    g.add_edge(1 + i, 1 + (i + 1) % rim);
  }
  return g;
}

}  // namespace strandkit
