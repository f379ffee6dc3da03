#include "strandkit/arrangement.hpp"

#include "strandkit/error.hpp"

#include <algorithm>
#include <tuple>

namespace strandkit {

const std::vector<int>& Arrangement::events_on(CurveId c) const {
  auto it = along.find(c);
  if (it == along.end()) throw InputError("unknown curve id " + std::to_string(c));
  return it->second;
}

int IntersectionGraph::index_of(CurveId c) const {
  auto it = std::lower_bound(ids.begin(), ids.end(), c);
  if (it == ids.end() || *it != c) throw InputError("unknown curve id " + std::to_string(c));
  return static_cast<int>(it - ids.begin());
}

namespace {

// A crossing before ids are assigned; position = (segment index, parameter).
struct RawCrossing {
  CurveId a = 0;
  CurveId b = 0;
  Point at;
  int seg_a = 0;
  Rational t_a;
  int seg_b = 0;
  Rational t_b;
  int chirality = 1;
};

std::string describe(const Point& p) { return "(" + to_string(p.x) + ", " + to_string(p.y) + ")"; }

void finish(Arrangement& arr, std::vector<RawCrossing>& raw,
            const std::map<CurveId, std::vector<std::size_t>>& order_on) {
  // order_on[c] lists raw indices along c. Ids sort by (a, b, index along a).
  std::vector<int> pos_a(raw.size()), pos_b(raw.size());
  for (const auto& [c, list] : order_on) {
    for (std::size_t i = 0; i < list.size(); ++i) {
      RawCrossing& r = raw[list[i]];
      (r.a == c ? pos_a : pos_b)[list[i]] = static_cast<int>(i);
    }
  }
  std::vector<std::size_t> idx(raw.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](std::size_t x, std::size_t y) {
    return std::tie(raw[x].a, raw[x].b, pos_a[x]) < std::tie(raw[y].a, raw[y].b, pos_a[y]);
  });
  std::vector<int> id_of(raw.size());
  arr.events.resize(raw.size());
  for (std::size_t k = 0; k < idx.size(); ++k) {
    const std::size_t i = idx[k];
    id_of[i] = static_cast<int>(k);
    CrossingEvent& e = arr.events[k];
    e.id = static_cast<int>(k);
    e.curve_a = raw[i].a;
    e.curve_b = raw[i].b;
    e.index_in_a = pos_a[i];
    e.index_in_b = pos_b[i];
    e.chirality = raw[i].chirality;
  }
  for (const auto& [c, list] : order_on) {
    auto& out = arr.along[c];
    for (std::size_t i : list) out.push_back(id_of[i]);
  }
}

Arrangement geometric_arrangement(const StringScene& scene) {
  Arrangement arr;
  arr.curves = scene.curve_ids();
  std::vector<RawCrossing> raw;
  const auto& cs = scene.curves;
  for (std::size_t i = 0; i < cs.size(); ++i) {
    for (std::size_t j = i + 1; j < cs.size(); ++j) {
      const Curve& a = cs[i];
      const Curve& b = cs[j];
      for (std::size_t s = 0; s + 1 < a.points.size(); ++s) {
        for (std::size_t u = 0; u + 1 < b.points.size(); ++u) {
          const auto hit = intersect_segments(a.points[s], a.points[s + 1], b.points[u], b.points[u + 1]);
          const std::string who = "curves " + std::to_string(a.id) + " and " + std::to_string(b.id);
          switch (hit.contact) {
            case SegmentContact::None:
              break;
            case SegmentContact::Overlap:
              throw InputError("degenerate: " + who + " overlap along a collinear piece");
            case SegmentContact::Touching: {
              const bool end_a = hit.point == a.points.front() || hit.point == a.points.back();
              const bool end_b = hit.point == b.points.front() || hit.point == b.points.back();
              if (end_a || end_b) {
                throw InputError("degenerate: endpoint of " + who.substr(7) + " lies on the other curve at " +
                                 describe(hit.point));
              }
              throw InputError("degenerate: " + who + " touch at polyline vertex " + describe(hit.point) +
                               " (tangency or crossing through a bend)");
            }
            case SegmentContact::Proper: {
              RawCrossing r;
              r.a = a.id;
              r.b = b.id;
              r.at = hit.point;
              r.seg_a = static_cast<int>(s);
              r.t_a = hit.param_a;
              r.seg_b = static_cast<int>(u);
              r.t_b = hit.param_b;
              const Point da{a.points[s + 1].x - a.points[s].x, a.points[s + 1].y - a.points[s].y};
              const Point db{b.points[u + 1].x - b.points[u].x, b.points[u + 1].y - b.points[u].y};
              r.chirality = da.x * db.y - da.y * db.x > 0 ? 1 : -1;
              raw.push_back(std::move(r));
              break;
            }
          }
        }
      }
    }
  }
  {
    std::vector<std::size_t> by_point(raw.size());
    for (std::size_t i = 0; i < raw.size(); ++i) by_point[i] = i;
    std::sort(by_point.begin(), by_point.end(), [&](std::size_t x, std::size_t y) { return raw[x].at < raw[y].at; });
    for (std::size_t k = 0; k + 1 < by_point.size(); ++k) {
      if (raw[by_point[k]].at == raw[by_point[k + 1]].at) {
        throw InputError("degenerate: three or more curves meet at " + describe(raw[by_point[k]].at));
      }
    }
  }
  std::map<CurveId, std::vector<std::size_t>> order_on;
  for (CurveId c : arr.curves) order_on[c];
  for (std::size_t i = 0; i < raw.size(); ++i) {
    order_on[raw[i].a].push_back(i);
    order_on[raw[i].b].push_back(i);
  }
  for (auto& [c, list] : order_on) {
    auto key = [&, c = c](std::size_t i) {
      const RawCrossing& r = raw[i];
      return r.a == c ? std::make_pair(r.seg_a, r.t_a) : std::make_pair(r.seg_b, r.t_b);
    };
    std::sort(list.begin(), list.end(), [&](std::size_t x, std::size_t y) { return key(x) < key(y); });
  }
  finish(arr, raw, order_on);
  for (CrossingEvent& e : arr.events) e.label = std::to_string(e.id);
  // locations follow the final ids
  for (std::size_t i = 0; i < raw.size(); ++i) {
    const RawCrossing& r = raw[i];
    const auto& list = order_on.at(r.a);
    const int pos = static_cast<int>(std::find(list.begin(), list.end(), i) - list.begin());
    arr.events[static_cast<std::size_t>(arr.along.at(r.a)[static_cast<std::size_t>(pos)])].location = r.at;
  }
  return arr;
}

Arrangement abstract_arrangement(const StringScene& scene) {
  Arrangement arr;
  arr.curves = scene.curve_ids();
  arr.twists = scene.twists;
  std::map<std::string, std::size_t> raw_of;
  std::vector<RawCrossing> raw;
  std::vector<std::string> labels;
  std::map<CurveId, std::vector<std::size_t>> order_on;
  for (const Curve& c : scene.curves) {
    auto& list = order_on[c.id];
    for (const auto& x : c.crossings) {
      auto [it, fresh] = raw_of.emplace(x, raw.size());
      if (fresh) {
        RawCrossing r;
        r.a = c.id;  // curves are visited in id order, so the first owner is the smaller
        auto ch = scene.chirality.find(x);
        r.chirality = ch == scene.chirality.end() ? 1 : ch->second;
        raw.push_back(std::move(r));
        labels.push_back(x);
      } else {
        raw[it->second].b = c.id;
      }
      list.push_back(it->second);
    }
  }
  finish(arr, raw, order_on);
  for (std::size_t i = 0; i < raw.size(); ++i) {
    const auto& list = order_on.at(raw[i].a);
    const int pos = static_cast<int>(std::find(list.begin(), list.end(), i) - list.begin());
    arr.events[static_cast<std::size_t>(arr.along.at(raw[i].a)[static_cast<std::size_t>(pos)])].label = labels[i];
  }
  return arr;
}

}  // namespace

Arrangement compute_arrangement(const StringScene& scene) {
  return scene.mode == SceneMode::Geometric ? geometric_arrangement(scene) : abstract_arrangement(scene);
}

IntersectionGraph intersection_graph(const Arrangement& arrangement) {
  IntersectionGraph ig;
  ig.ids = arrangement.curves;
  ig.graph = Graph(static_cast<int>(ig.ids.size()));
  for (const CrossingEvent& e : arrangement.events) ig.graph.add_edge(ig.index_of(e.curve_a), ig.index_of(e.curve_b));
  return ig;
}

std::vector<std::pair<CurveId, CurveEnd>> boundary_order(const StringScene& scene, int disk) {
  const Disk& d = scene.disk(disk);
  if (!d.centre) return d.boundary;
  std::vector<std::pair<Point, std::pair<CurveId, CurveEnd>>> feet;
  for (const Curve& c : scene.curves) {
    if (!c.grounded || c.grounded->disk != disk) continue;
    const Point& p = c.grounded->end == CurveEnd::Start ? c.points.front() : c.points.back();
    feet.push_back({Point{p.x - d.centre->x, p.y - d.centre->y}, {c.id, c.grounded->end}});
  }
  std::stable_sort(feet.begin(), feet.end(), [](const auto& x, const auto& y) { return angle_less(x.first, y.first); });
  std::vector<std::pair<CurveId, CurveEnd>> out;
  for (auto& f : feet) out.push_back(f.second);
  return out;
}

StringScene to_abstract(const StringScene& scene, const Arrangement& arrangement) {
  StringScene out;
  out.mode = SceneMode::Abstract;
  out.colours = scene.colours;
  out.twists = arrangement.twists;
  for (const Curve& c : scene.curves) {
    Curve a;
    a.id = c.id;
    a.grounded = c.grounded;
    for (int e : arrangement.events_on(c.id)) a.crossings.push_back(arrangement.events[static_cast<std::size_t>(e)].label);
    out.curves.push_back(std::move(a));
  }
  for (const CrossingEvent& e : arrangement.events) {
    if (e.chirality != 1) out.chirality[e.label] = e.chirality;
  }
  for (const Disk& d : scene.disks) {
    Disk a;
    a.id = d.id;
    a.boundary = boundary_order(scene, d.id);
    out.disks.push_back(std::move(a));
  }
  validate_scene(out);
  return out;
}

StringScene strip_isolated(const StringScene& scene, const Arrangement& arrangement) {
  StringScene out = scene;
  out.curves.clear();
  for (const Curve& c : scene.curves) {
    if (!arrangement.events_on(c.id).empty()) out.curves.push_back(c);
  }
  std::set<CurveId> kept;
  for (const Curve& c : out.curves) kept.insert(c.id);
  for (Disk& d : out.disks) {
    std::erase_if(d.boundary, [&](const auto& b) { return !kept.contains(b.first); });
  }
  std::erase_if(out.twists, [&](const auto& t) { return !kept.contains(t.first); });
  std::erase_if(out.colours, [&](const auto& c) { return !kept.contains(c.first); });
  return out;
}

nlohmann::json events_to_json(const Arrangement& arrangement) {
  nlohmann::json j = nlohmann::json::array();
  for (const CrossingEvent& e : arrangement.events) {
    nlohmann::json je{{"id", e.id},
                      {"curve_a", e.curve_a},
                      {"curve_b", e.curve_b},
                      {"index_in_a", e.index_in_a},
                      {"index_in_b", e.index_in_b},
                      {"chirality", e.chirality},
                      {"label", e.label}};
    if (e.location) je["location"] = point_to_json(*e.location);
    j.push_back(std::move(je));
  }
  return j;
}

}  // namespace strandkit
