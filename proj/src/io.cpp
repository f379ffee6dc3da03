#include "strandkit/io.hpp"

#include "strandkit/error.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <set>
#include <sstream>

namespace strandkit {

namespace {

const char* kind_name(VertexKind k) { return k == VertexKind::Endpoint ? "endpoint" : "crossing"; }

const char* palette(int colour) {
  static const char* colours[] = {"#1f77b4", "#2ca02c", "#d62728", "#9467bd", "#8c564b",
                                  "#e377c2", "#7f7f7f", "#bcbd22", "#17becf", "#ff7f0e"};
  return colours[static_cast<std::size_t>(colour - 1) % 10];
}

std::vector<std::set<CurveId>> walk_owners(const ColouredPlanarisation& cp) {
  std::vector<std::set<CurveId>> owners(static_cast<std::size_t>(cp.graph.num_vertices()));
  for (const auto& [c, walk] : cp.walks)
    for (int x : walk) owners[static_cast<std::size_t>(x)].insert(c);
  return owners;
}

// Part of a polyline from point `from` to point `to`, both on the curve,
// `from` before `to`.
std::vector<Point> subpolyline(const std::vector<Point>& pts, const Point& from, const Point& to) {
  std::vector<Point> out;
  bool inside = false;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    if (!inside && on_segment(pts[i], pts[i + 1], from)) {
      inside = true;
      out.push_back(from);
    }
    if (inside && on_segment(pts[i], pts[i + 1], to) && !(out.size() == 1 && out.front() == to)) {
      out.push_back(to);
      return out;
    }
    if (inside) out.push_back(pts[i + 1]);
  }
  return out;
}

}  // namespace

nlohmann::json graph_to_json(const IntersectionGraph& ig) {
  nlohmann::json j;
  j["vertices"] = ig.ids;
  auto& edges = j["edges"] = nlohmann::json::array();
  for (auto [u, v] : ig.graph.edges()) edges.push_back({ig.ids[static_cast<std::size_t>(u)], ig.ids[static_cast<std::size_t>(v)]});
  return j;
}

std::string graph_to_dot(const IntersectionGraph& ig) {
  std::ostringstream out;
  out << "graph G {\n";
  for (CurveId c : ig.ids) out << "  " << c << ";\n";
  for (auto [u, v] : ig.graph.edges()) {
    out << "  " << ig.ids[static_cast<std::size_t>(u)] << " -- " << ig.ids[static_cast<std::size_t>(v)] << ";\n";
  }
  out << "}\n";
  return out.str();
}

nlohmann::json planarisation_to_json(const Planarisation& p, const OrderedColouring* colouring) {
  nlohmann::json j;
  auto& vertices = j["vertices"] = nlohmann::json::array();
  for (int v = 0; v < p.graph.num_vertices(); ++v) {
    nlohmann::json jv{{"id", v}, {"kind", kind_name(p.kind[static_cast<std::size_t>(v)])}};
    if (p.is_endpoint(v)) jv["curve"] = p.curve_of[static_cast<std::size_t>(v)];
    else jv["event"] = p.event_of[static_cast<std::size_t>(v)];
    if (colouring) jv["level"] = p.level(v, *colouring);
    vertices.push_back(std::move(jv));
  }
  auto& edges = j["edges"] = nlohmann::json::array();
  for (const auto& e : p.graph.edges()) edges.push_back({{"u", e.u}, {"v", e.v}, {"curve", e.tag}, {"sign", e.sign}});
  j["euler_genus"] = p.graph.euler_genus();
  return j;
}

std::string planarisation_to_dot(const Planarisation& p, const OrderedColouring* colouring) {
  std::ostringstream out;
  out << "graph planarisation {\n";
  for (int v = 0; v < p.graph.num_vertices(); ++v) {
    out << "  " << v << " [kind=" << kind_name(p.kind[static_cast<std::size_t>(v)]);
    if (colouring) out << ", level=" << p.level(v, *colouring);
    out << (p.is_endpoint(v) ? ", shape=box" : ", shape=point") << "];\n";
  }
  for (const auto& e : p.graph.edges()) out << "  " << e.u << " -- " << e.v << " [curve=" << e.tag << "];\n";
  out << "}\n";
  return out.str();
}

nlohmann::json coloured_planarisation_to_json(const ColouredPlanarisation& cp) {
  const auto owners = walk_owners(cp);
  nlohmann::json j;
  auto& vertices = j["vertices"] = nlohmann::json::array();
  for (int x = 0; x < cp.graph.num_vertices(); ++x) {
    vertices.push_back({{"id", x},
                        {"kind", cp.is_endpoint(x) ? "endpoint" : "crossing"},
                        {"level", cp.level[static_cast<std::size_t>(x)]},
                        {"owners", owners[static_cast<std::size_t>(x)]}});
  }
  auto& edges = j["edges"] = nlohmann::json::array();
  for (const auto& e : cp.graph.edges()) edges.push_back({{"u", e.u}, {"v", e.v}, {"curve", e.tag}});
  auto& walks = j["walks"] = nlohmann::json::object();
  for (const auto& [c, w] : cp.walks) walks[std::to_string(c)] = w;
  j["psi"] = cp.psi;
  j["sections"] = cp.sections;
  j["euler_genus"] = cp.graph.euler_genus();
  return j;
}

std::string coloured_planarisation_to_dot(const ColouredPlanarisation& cp) {
  const auto owners = walk_owners(cp);
  std::ostringstream out;
  out << "graph coloured_planarisation {\n";
  for (int x = 0; x < cp.graph.num_vertices(); ++x) {
    out << "  " << x << " [kind=" << (cp.is_endpoint(x) ? "endpoint" : "crossing") << ", level=" << cp.level[static_cast<std::size_t>(x)]
        << ", owners=\"";
    bool first = true;
    for (CurveId c : owners[static_cast<std::size_t>(x)]) {
      out << (first ? "" : ",") << c;
      first = false;
    }
    out << "\"];\n";
  }
  for (const auto& e : cp.graph.edges()) out << "  " << e.u << " -- " << e.v << " [curve=" << e.tag << "];\n";
  out << "}\n";
  return out.str();
}

std::string scene_to_svg(const StringScene& scene, const Arrangement& arrangement, const std::optional<OrderedColouring>& colouring) {
  if (scene.mode != SceneMode::Geometric) throw InputError("SVG needs a geometric scene");
  double xmin = 1e300, ymin = 1e300, xmax = -1e300, ymax = -1e300;
  auto grow = [&](double x, double y) {
    xmin = std::min(xmin, x);
    xmax = std::max(xmax, x);
    ymin = std::min(ymin, y);
    ymax = std::max(ymax, y);
  };
  for (const Curve& c : scene.curves)
    for (const Point& p : c.points) grow(to_double(p.x), to_double(p.y));
  for (const Disk& d : scene.disks) {
    const double r = to_double(d.radius);
    grow(to_double(d.centre->x) - r, to_double(d.centre->y) - r);
    grow(to_double(d.centre->x) + r, to_double(d.centre->y) + r);
  }
  if (xmin > xmax) xmin = ymin = 0, xmax = ymax = 1;
  const double span = std::max({xmax - xmin, ymax - ymin, 1e-9});
  const double scale = 800.0 / span;
  const double pad = 20;
  auto X = [&](const Rational& x) { return pad + (to_double(x) - xmin) * scale; };
  auto Y = [&](const Rational& y) { return pad + (ymax - to_double(y)) * scale; };  // y up
  std::ostringstream out;
  out << std::fixed << std::setprecision(3);
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << 2 * pad + (xmax - xmin) * scale << "\" height=\""
      << 2 * pad + (ymax - ymin) * scale << "\">\n";
  for (const Disk& d : scene.disks) {
    out << "  <circle cx=\"" << X(d.centre->x) << "\" cy=\"" << Y(d.centre->y) << "\" r=\"" << to_double(d.radius) * scale
        << "\" fill=\"#dddddd\" stroke=\"black\"/>\n";
  }
  auto polyline = [&](const std::vector<Point>& pts, const std::string& style) {
    out << "  <polyline points=\"";
    for (std::size_t i = 0; i < pts.size(); ++i) out << (i ? " " : "") << X(pts[i].x) << "," << Y(pts[i].y);
    out << "\" fill=\"none\" " << style << "/>\n";
  };
  if (colouring) {
    const Planarisation p = planarise(arrangement);
    for (CurveId c : p.curves) {
      const auto& pts = scene.curve(c).points;
      const std::string band = std::string("stroke=\"") + palette((*colouring)(c)) + "\" stroke-opacity=\"0.35\" stroke-width=\"10\"";
      for (const auto& sec : sections(p, *colouring, c)) {
        const auto& a = arrangement.events[static_cast<std::size_t>(p.event_of[static_cast<std::size_t>(sec.front())])].location;
        const auto& b = arrangement.events[static_cast<std::size_t>(p.event_of[static_cast<std::size_t>(sec.back())])].location;
        if (sec.size() == 1) {
          out << "  <circle cx=\"" << X(a->x) << "\" cy=\"" << Y(a->y) << "\" r=\"6\" fill=\"" << palette((*colouring)(c))
              << "\" fill-opacity=\"0.35\"/>\n";
        } else {
          polyline(subpolyline(pts, *a, *b), band);
        }
      }
    }
  }
  for (const Curve& c : scene.curves) {
    const char* stroke = colouring ? palette((*colouring)(c.id)) : "black";
    polyline(c.points, std::string("stroke=\"") + stroke + "\" stroke-width=\"2\"");
    out << "  <text x=\"" << X(c.points.front().x) + 3 << "\" y=\"" << Y(c.points.front().y) - 3 << "\" font-size=\"12\">" << c.id
        << "</text>\n";
  }
  for (const auto& e : arrangement.events) {
    if (e.location) out << "  <circle cx=\"" << X(e.location->x) << "\" cy=\"" << Y(e.location->y) << "\" r=\"2.5\" fill=\"black\"/>\n";
  }
  out << "</svg>\n";
  return out.str();
}

TreeDecomposition td_from_pace(const std::string& text, int* num_vertices) {
  std::istringstream in(text);
  std::string line;
  TreeDecomposition td;
  int bags = -1, n = -1;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == 'c') continue;
    std::istringstream ls(line);
    if (line[0] == 's') {
      std::string s, kind;
      int w = 0;
      if (!(ls >> s >> kind >> bags >> w >> n) || kind != "td" || bags < 0 || n < 0) throw InputError("bad PACE header: " + line);
      td.bags.assign(static_cast<std::size_t>(bags), {});
    } else if (line[0] == 'b') {
      if (bags < 0) throw InputError("PACE bag before header");
      std::string b;
      int id = 0;
      ls >> b >> id;
      if (id < 1 || id > bags) throw InputError("PACE bag id out of range: " + line);
      int v = 0;
      auto& bag = td.bags[static_cast<std::size_t>(id - 1)];
      while (ls >> v) {
        if (v < 1 || v > n) throw InputError("PACE vertex out of range: " + line);
        bag.push_back(v - 1);
      }
      std::sort(bag.begin(), bag.end());
      bag.erase(std::unique(bag.begin(), bag.end()), bag.end());
    } else {
      int a = 0, b = 0;
      if (bags < 0 || !(ls >> a >> b) || a < 1 || b < 1 || a > bags || b > bags) throw InputError("bad PACE tree edge: " + line);
      td.tree_edges.emplace_back(a - 1, b - 1);
    }
  }
  if (bags < 0) throw InputError("PACE header missing");
  if (num_vertices) *num_vertices = n;
  return td;
}

TreeDecomposition td_from_json(const nlohmann::json& j, int* num_vertices) {
  try {
    TreeDecomposition td;
    td.bags = j.at("bags").get<std::vector<std::vector<int>>>();
    for (auto& bag : td.bags) std::sort(bag.begin(), bag.end());
    for (const auto& e : j.at("tree_edges")) td.tree_edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    const int n = j.at("num_vertices").get<int>();
    for (std::size_t i = 0; i < td.tree_edges.size(); ++i) {
      auto [a, b] = td.tree_edges[i];
      if (a < 0 || b < 0 || a >= static_cast<int>(td.bags.size()) || b >= static_cast<int>(td.bags.size())) {
        throw InputError("tree edge out of range");
      }
    }
    for (const auto& bag : td.bags)
      for (int v : bag)
        if (v < 0 || v >= n) throw InputError("bag vertex out of range");
    if (num_vertices) *num_vertices = n;
    return td;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("bad decomposition JSON: ") + e.what());
  }
}

std::string dump_json(const nlohmann::json& j) { return j.dump(2) + "\n"; }

void write_text(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw InputError("cannot write " + path);
  f << text;
  if (!f) throw InputError("failed writing " + path);
}

}  // namespace strandkit
