#include "strandkit/families.hpp"

#include "strandkit/arrangement.hpp"
#include "strandkit/error.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

namespace strandkit {

namespace {

Point lerp(const Point& a, const Point& b, const Rational& s) {
  return Point{a.x + s * (b.x - a.x), a.y + s * (b.y - a.y)};
}

Point vertex_centroid(const std::vector<Point>& poly) {
  Point c{0, 0};
  for (const Point& p : poly) {
    c.x += p.x;
    c.y += p.y;
  }
  const Rational n(static_cast<long>(poly.size()));
  return Point{c.x / n, c.y / n};
}

// Simple graph with the given neighbour rotations.
EmbeddedGraph from_rotation(const std::vector<std::vector<int>>& rot) {
  const int n = static_cast<int>(rot.size());
  EmbeddedGraph g(n);
  std::map<std::pair<int, int>, int> edge_of;
  for (int u = 0; u < n; ++u) {
    for (int v : rot[static_cast<std::size_t>(u)]) {
      if (u < v) edge_of[{u, v}] = g.add_edge(u, v);
    }
  }
  for (int u = 0; u < n; ++u) {
    std::vector<int> halves;
    for (int v : rot[static_cast<std::size_t>(u)]) {
      halves.push_back(u < v ? 2 * edge_of.at({u, v}) : 2 * edge_of.at({v, u}) + 1);
    }
    g.set_rotation(u, std::move(halves));
  }
  g.validate();
  return g;
}

}  // namespace

Rational twice_area(const std::vector<Point>& polygon) {
  Rational a = 0;
  for (std::size_t i = 0; i < polygon.size(); ++i) {
    const Point& p = polygon[i];
    const Point& q = polygon[(i + 1) % polygon.size()];
    a += p.x * q.y - p.y * q.x;
  }
  return a;
}

std::vector<Point> clip_convex(const std::vector<Point>& a, const std::vector<Point>& b) {
  std::vector<Point> out = a;
  for (std::size_t i = 0; i < b.size() && !out.empty(); ++i) {
    const Point& e0 = b[i];
    const Point& e1 = b[(i + 1) % b.size()];
    std::vector<Point> next;
    for (std::size_t k = 0; k < out.size(); ++k) {
      const Point& cur = out[k];
      const Point& nxt = out[(k + 1) % out.size()];
      const Rational sc = cross(e0, e1, cur);
      const Rational sn = cross(e0, e1, nxt);
      if (sc >= 0) next.push_back(cur);
      if ((sc > 0 && sn < 0) || (sc < 0 && sn > 0)) next.push_back(lerp(cur, nxt, sc / (sc - sn)));
    }
    out.clear();
    for (const Point& p : next) {
      if (out.empty() || !(out.back() == p)) out.push_back(p);
    }
    while (out.size() > 1 && out.front() == out.back()) out.pop_back();
  }
  return out;
}

Graph convex_intersection_graph(const ConvexScene& scene) {
  const int n = static_cast<int>(scene.sets.size());
  for (int i = 0; i < n; ++i) {
    const auto& s = scene.sets[static_cast<std::size_t>(i)];
    if (s.size() < 3 || twice_area(s) <= 0) throw InputError("set " + std::to_string(i) + " is not a ccw convex polygon");
    for (std::size_t k = 0; k < s.size(); ++k) {
      if (orientation(s[k], s[(k + 1) % s.size()], s[(k + 2) % s.size()]) <= 0) {
        throw InputError("set " + std::to_string(i) + " is not strictly convex");
      }
    }
  }
  Graph g(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const auto inter = clip_convex(scene.sets[static_cast<std::size_t>(i)], scene.sets[static_cast<std::size_t>(j)]);
      if (inter.empty()) continue;
      if (twice_area(inter) > 0) {
        g.add_edge(i, j);
      } else {
        throw InputError("sets " + std::to_string(i) + " and " + std::to_string(j) + " touch without overlapping");
      }
    }
  }
  return g;
}

ConvexDrawing convex_to_drawing(const ConvexScene& scene) {
  ConvexDrawing d;
  d.graph = convex_intersection_graph(scene);
  d.edges = d.graph.edges();
  d.max_degree = d.graph.max_degree();
  const int n = d.graph.num_vertices();
  // all witness points with the polygon they must stay inside
  std::vector<Point> base;
  std::vector<std::vector<Point>> region;
  for (int i = 0; i < n; ++i) {
    region.push_back(scene.sets[static_cast<std::size_t>(i)]);
    base.push_back(vertex_centroid(region.back()));
  }
  for (auto [i, j] : d.edges) {
    region.push_back(clip_convex(scene.sets[static_cast<std::size_t>(i)], scene.sets[static_cast<std::size_t>(j)]));
    base.push_back(vertex_centroid(region.back()));
  }
  std::vector<Point> pts = base;
  std::vector<int> attempts(pts.size(), 0);
  auto bad_point = [&]() -> int {
    for (std::size_t a = 0; a < pts.size(); ++a) {
      for (std::size_t b = a + 1; b < pts.size(); ++b) {
        if (pts[a] == pts[b]) return static_cast<int>(b);
        for (std::size_t c = b + 1; c < pts.size(); ++c) {
          if (orientation(pts[a], pts[b], pts[c]) == 0) return static_cast<int>(c);
        }
      }
    }
    return -1;
  };
  for (int round = 0;; ++round) {
    const int k = bad_point();
    if (k < 0) break;
    if (round > 2000) throw CheckFailure("could not place witness points in general position");
    const auto ku = static_cast<std::size_t>(k);
    const int a = ++attempts[ku];
    const auto& poly = region[ku];
    const Rational eps(1, 3 + a);
    pts[ku] = lerp(base[ku], poly[static_cast<std::size_t>(a) % poly.size()], eps);
    if (a % static_cast<int>(poly.size()) == 0) {
      // second pass: mix two vertices so the direction keeps changing
      pts[ku] = lerp(pts[ku], poly[static_cast<std::size_t>(a / static_cast<int>(poly.size())) % poly.size()],
                     Rational(1, 7 + a));
    }
  }
  d.p.assign(pts.begin(), pts.begin() + n);
  for (std::size_t e = 0; e < d.edges.size(); ++e) d.q[d.edges[e]] = pts[static_cast<std::size_t>(n) + e];

  std::vector<std::array<Point, 3>> lines;
  for (const auto& e : d.edges) lines.push_back({d.p[static_cast<std::size_t>(e.first)], d.q.at(e), d.p[static_cast<std::size_t>(e.second)]});
  d.crossings.assign(d.edges.size(), 0);
  for (std::size_t a = 0; a < lines.size(); ++a) {
    for (std::size_t b = a + 1; b < lines.size(); ++b) {
      int count = 0;
      for (int s = 0; s < 2; ++s) {
        for (int u = 0; u < 2; ++u) {
          const auto hit = intersect_segments(lines[a][static_cast<std::size_t>(s)], lines[a][static_cast<std::size_t>(s + 1)],
                                              lines[b][static_cast<std::size_t>(u)], lines[b][static_cast<std::size_t>(u + 1)]);
          if (hit.contact == SegmentContact::Proper) ++count;
          if (hit.contact == SegmentContact::Overlap) throw CheckFailure("drawing edges overlap");
        }
      }
      d.crossings[a] += count;
      d.crossings[b] += count;
    }
  }
  for (int c : d.crossings) d.max_crossings = std::max(d.max_crossings, c);
  if (d.max_crossings > 2 * d.max_degree * d.max_degree) {
    throw CheckFailure("edge with " + std::to_string(d.max_crossings) + " crossings exceeds 2 * Delta^2");
  }
  return d;
}

ConvexScene gen_rectangles(int delta) {
  ConvexScene s;
  auto rect = [](long x0, long y0, long x1, long y1) {
    return std::vector<Point>{{x0, y0}, {x1, y0}, {x1, y1}, {x0, y1}};
  };
  for (int i = 0; i < delta; ++i) s.sets.push_back(rect(2 * i, 0, 2 * i + 1, 2 * delta));
  for (int j = 0; j < delta; ++j) s.sets.push_back(rect(0, 2 * j, 2 * delta, 2 * j + 1));
  return s;
}

ConvexScene gen_random_convex(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> centre(0, 100);
  std::uniform_int_distribution<long> offset(-18, 18);
  std::uniform_int_distribution<int> corners(3, 6);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    ConvexScene s;
    for (int i = 0; i < n; ++i) {
      const long cx = centre(rng);
      const long cy = centre(rng);
      std::vector<Point> pts;
      const int k = corners(rng);
      for (int c = 0; c < k; ++c) pts.push_back(Point{cx + offset(rng), cy + offset(rng)});
      // convex hull (monotone chain), counter-clockwise
      std::sort(pts.begin(), pts.end());
      pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
      std::vector<Point> hull;
      for (int pass = 0; pass < 2; ++pass) {
        const std::size_t start = hull.size();
        for (const Point& p : pts) {
          while (hull.size() >= start + 2 && orientation(hull[hull.size() - 2], hull.back(), p) <= 0) hull.pop_back();
          hull.push_back(p);
        }
        hull.pop_back();
        std::reverse(pts.begin(), pts.end());
      }
      if (hull.size() < 3) {
        --i;
        continue;
      }
      s.sets.push_back(std::move(hull));
    }
    try {
      convex_intersection_graph(s);
      return s;
    } catch (const InputError&) {
    }
  }
  throw CheckFailure("random convex scene generation did not converge");
}

namespace {

// Polygon on the circle from fixed stereographic parameters, in angular order.
std::vector<Point> circle_polygon(const Point& c, const Rational& r) {
  const std::vector<Rational> before{0, Rational(1, 5), Rational(2, 5), Rational(2, 3), 1, Rational(3, 2), Rational(5, 2), 5};
  const std::vector<Rational> after{-5, Rational(-5, 2), Rational(-3, 2), -1, Rational(-2, 3), Rational(-2, 5), Rational(-1, 5)};
  std::vector<Point> out;
  for (const auto& u : before) out.push_back(rational_circle_point(c, r, u));
  out.push_back(Point{c.x - r, c.y});
  for (const auto& u : after) out.push_back(rational_circle_point(c, r, u));
  return out;
}

}  // namespace

GridDisk gen_grid_disk(int t) {
  if (t < 2) throw InputError("grid-disk family needs t >= 2");
  GridDisk f;
  const Rational small(11, 20);
  for (int r = 0; r < t; ++r) {
    for (int c = 0; c < t; ++c) {
      f.centres.push_back(Point{c, r});
      f.radii.push_back(small);
    }
  }
  f.centres.push_back(Point{Rational(t - 1, 2), Rational(t - 1, 2)});
  f.radii.push_back(Rational(t));
  for (std::size_t i = 0; i < f.centres.size(); ++i) f.polygons.sets.push_back(circle_polygon(f.centres[i], f.radii[i]));
  return f;
}

Graph circle_intersection_graph(const GridDisk& family) {
  const int n = static_cast<int>(family.centres.size());
  Graph g(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const Rational sum = family.radii[static_cast<std::size_t>(i)] + family.radii[static_cast<std::size_t>(j)];
      if (squared_distance(family.centres[static_cast<std::size_t>(i)], family.centres[static_cast<std::size_t>(j)]) < sum * sum) {
        g.add_edge(i, j);
      }
    }
  }
  return g;
}

CurveId segment_alpha(int t, int i, int j) { return t + (j - 1) * t + i; }
CurveId segment_beta(int t, int i, int j) { return t + t * t + (j - 1) * (t - 1) + i; }

StringScene gen_segment_family(int t) {
  if (t < 1) throw InputError("segment family needs t >= 1");
  nlohmann::json j;
  auto& curves = j["curves"] = nlohmann::json::array();
  auto seg = [&](CurveId id, const Point& a, const Point& b) {
    curves.push_back({{"id", id}, {"points", {point_to_json(a), point_to_json(b)}}});
  };
  seg(0, Point{0, 0}, Point{t + 1, 0});
  for (int i = 1; i <= t; ++i) seg(i, Point{i, -1}, Point{i, t + 1});
  for (int jj = 1; jj <= t; ++jj) {
    for (int i = 1; i <= t; ++i) {
      const Rational y = Rational(jj) + Rational(i % 2, 10);
      seg(segment_alpha(t, i, jj), Point{Rational(i) - Rational(7, 10), y}, Point{Rational(i) + Rational(7, 10), y});
    }
    for (int i = 1; i < t; ++i) {
      const Rational x = Rational(i) + Rational(1, 2);
      seg(segment_beta(t, i, jj), Point{x, Rational(jj) - Rational(1, 20)}, Point{x, Rational(jj) + Rational(3, 20)});
    }
  }
  return parse_scene(j);
}

MinorModel ktt_minor_model(const Graph& family_graph, int t) {
  MinorModel m;
  m.host = family_graph;
  for (int i = 1; i <= t; ++i) m.branch_sets.push_back({i});
  for (int jj = 1; jj <= t; ++jj) {
    std::vector<int> x;
    for (int i = 1; i <= t; ++i) {
      x.push_back(segment_alpha(t, i, jj));
      if (i < t) x.push_back(segment_beta(t, i, jj));
    }
    m.branch_sets.push_back(std::move(x));
  }
  return m;
}

bool is_k22_free(const Graph& g) {
  const int n = g.num_vertices();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        for (int d = c + 1; d < n; ++d) {
          // the three ways to split {a,b,c,d} into two pairs
          const int split[3][4] = {{a, b, c, d}, {a, c, b, d}, {a, d, b, c}};
          for (const auto& s : split) {
            if (g.has_edge(s[0], s[2]) && g.has_edge(s[0], s[3]) && g.has_edge(s[1], s[2]) && g.has_edge(s[1], s[3])) {
              return false;
            }
          }
        }
  return true;
}

namespace {

nlohmann::json point_list(const std::vector<Point>& pts) {
  nlohmann::json a = nlohmann::json::array();
  for (const Point& p : pts) a.push_back(point_to_json(p));
  return a;
}

// Adds curves one at a time, redrawing a curve until the scene stays valid
// and the per-pair crossing cap holds.
template <typename Draw>
StringScene grow_scene(nlohmann::json j, int n, int cap, Draw draw) {
  for (int c = 0; c < n; ++c) {
    bool placed = false;
    for (int attempt = 0; attempt < 500 && !placed; ++attempt) {
      nlohmann::json trial = j;
      trial["curves"].push_back(draw(c));
      try {
        const StringScene s = parse_scene(trial);
        const Arrangement arr = compute_arrangement(s);
        std::map<std::pair<CurveId, CurveId>, int> count;
        bool ok = true;
        for (const auto& e : arr.events) ok = ok && ++count[{e.curve_a, e.curve_b}] <= cap;
        if (!ok) continue;
        j = std::move(trial);
        placed = true;
      } catch (const InputError&) {
      }
    }
    if (!placed) throw CheckFailure("random scene generation could not place curve " + std::to_string(c));
  }
  return parse_scene(j);
}

}  // namespace

StringScene gen_random(int n, int crossings_per_pair, std::uint64_t seed) {
  if (n < 1 || crossings_per_pair < 1) throw InputError("gen_random needs n >= 1 and crossings_per_pair >= 1");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> coord(0, 1000);
  const int max_bends = std::min(crossings_per_pair - 1, 3);
  std::uniform_int_distribution<int> bends(0, max_bends);
  nlohmann::json j;
  j["curves"] = nlohmann::json::array();
  return grow_scene(j, n, crossings_per_pair, [&](int c) {
    std::vector<Point> pts;
    const int k = 2 + bends(rng);
    for (int i = 0; i < k; ++i) pts.push_back(Point{coord(rng), coord(rng)});
    return nlohmann::json{{"id", c}, {"points", point_list(pts)}};
  });
}

StringScene gen_random_grounded(int n, int disks, std::uint64_t seed) {
  if (disks < 1) throw InputError("gen_random_grounded needs at least one disk");
  std::mt19937_64 rng(seed);
  nlohmann::json j;
  j["curves"] = nlohmann::json::array();
  j["disks"] = nlohmann::json::array();
  const long spacing = 400;
  const Rational radius(60);
  for (int d = 0; d < disks; ++d) {
    j["disks"].push_back({{"id", d}, {"center", point_to_json(Point{d * spacing, 0})}, {"radius", rational_to_json(radius)}});
  }
  std::uniform_int_distribution<int> which(0, disks - 1);
  std::uniform_int_distribution<long> num(-40, 40);
  std::uniform_int_distribution<long> reach(20, 260);
  std::uniform_int_distribution<long> coord(-320, 320);
  std::uniform_int_distribution<int> bends(0, 2);
  return grow_scene(j, n, 3, [&](int c) {
    const int d = which(rng);
    const Point centre{d * spacing, 0};
    const Point foot = rational_circle_point(centre, radius, Rational(num(rng), 10));
    const Rational stretch(reach(rng), 60);
    std::vector<Point> pts{foot, Point{foot.x + stretch * (foot.x - centre.x), foot.y + stretch * (foot.y - centre.y)}};
    const int k = bends(rng);
    for (int i = 0; i < k; ++i) pts.push_back(Point{centre.x + coord(rng), coord(rng)});
    return nlohmann::json{{"id", c}, {"points", point_list(pts)}, {"grounded", {{"disk", d}, {"end", "start"}}}};
  });
}

EmbeddedGraph embedded_grid(int rows, int cols) {
  std::vector<std::vector<int>> rot(static_cast<std::size_t>(rows * cols));
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      auto& out = rot[static_cast<std::size_t>(r * cols + c)];
      if (c + 1 < cols) out.push_back(r * cols + c + 1);
      if (r + 1 < rows) out.push_back((r + 1) * cols + c);
      if (c > 0) out.push_back(r * cols + c - 1);
      if (r > 0) out.push_back((r - 1) * cols + c);
    }
  }
  return from_rotation(rot);
}

EmbeddedGraph embedded_wheel(int rim) {
  std::vector<std::vector<int>> rot(static_cast<std::size_t>(rim + 1));
  for (int k = 1; k <= rim; ++k) {
    rot[0].push_back(k);
    const int next = k % rim + 1;
    const int prev = (k + rim - 2) % rim + 1;
    rot[static_cast<std::size_t>(k)] = {next, 0, prev};
  }
  return from_rotation(rot);
}

EmbeddedGraph random_planar_fixture(int n, int drop, std::uint64_t seed) {
  if (n < 3) throw InputError("random planar fixture needs at least 3 vertices");
  std::mt19937_64 rng(seed);
  std::vector<std::vector<int>> rot{{1, 2}, {2, 0}, {0, 1}};
  std::vector<std::array<int, 3>> faces{{0, 1, 2}, {0, 2, 1}};
  auto insert_after = [&](int at, int after, int x) {
    auto& r = rot[static_cast<std::size_t>(at)];
    r.insert(std::find(r.begin(), r.end(), after) + 1, x);
  };
  for (int x = 3; x < n; ++x) {
    const std::size_t f = rng() % faces.size();
    const auto [a, b, c] = faces[f];
    insert_after(a, b, x);
    insert_after(b, c, x);
    insert_after(c, a, x);
    rot.push_back({a, b, c});
    faces[f] = {a, b, x};
    faces.push_back({b, c, x});
    faces.push_back({c, a, x});
  }
  // drop edges while keeping the graph connected
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v : rot[static_cast<std::size_t>(u)])
      if (u < v) edges.emplace_back(u, v);
  std::shuffle(edges.begin(), edges.end(), rng);
  const std::size_t to_drop = edges.size() * static_cast<std::size_t>(std::clamp(drop, 0, 100)) / 100;
  std::size_t dropped = 0;
  for (auto [u, v] : edges) {
    if (dropped == to_drop) break;
    auto trial = rot;
    std::erase(trial[static_cast<std::size_t>(u)], v);
    std::erase(trial[static_cast<std::size_t>(v)], u);
    Graph g(n);
    for (int a = 0; a < n; ++a)
      for (int b : trial[static_cast<std::size_t>(a)]) g.add_edge(a, b);
    if (!is_connected(g)) continue;
    rot = std::move(trial);
    ++dropped;
  }
  return from_rotation(rot);
}

}  // namespace strandkit
