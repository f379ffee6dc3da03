#include "strandkit/scene.hpp"

#include "strandkit/error.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <random>

namespace strandkit {

using nlohmann::json;

const Curve& StringScene::curve(CurveId id) const {
  auto it = std::lower_bound(curves.begin(), curves.end(), id,
                             [](const Curve& c, CurveId v) { return c.id < v; });
  if (it == curves.end() || it->id != id) throw InputError("unknown curve id " + std::to_string(id));
  return *it;
}

const Disk& StringScene::disk(int id) const {
  for (const Disk& d : disks) {
    if (d.id == id) return d;
  }
  throw InputError("unknown disk id " + std::to_string(id));
}

std::vector<CurveId> StringScene::curve_ids() const {
  std::vector<CurveId> ids;
  ids.reserve(curves.size());
  for (const Curve& c : curves) ids.push_back(c.id);
  return ids;
}

json rational_to_json(const Rational& r) {
  const BigInt num = boost::multiprecision::numerator(r);
  const BigInt den = boost::multiprecision::denominator(r);
  const BigInt lo = std::numeric_limits<std::int64_t>::min();
  const BigInt hi = std::numeric_limits<std::int64_t>::max();
  if (num >= lo && num <= hi && den <= hi) {
    return json::array({static_cast<std::int64_t>(num), static_cast<std::int64_t>(den)});
  }
  return json(num.str() + "/" + den.str());
}

Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    const auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(BigInt(s));
    const BigInt den(s.substr(slash + 1));
    if (den == 0) throw InputError("rational with zero denominator: " + s);
    return Rational(BigInt(s.substr(0, slash)), den);
  }
  if (j.is_array() && j.size() == 2 && j[0].is_number_integer() && j[1].is_number_integer()) {
    const auto den = j[1].get<std::int64_t>();
    if (den == 0) throw InputError("rational with zero denominator");
    return Rational(BigInt(j[0].get<std::int64_t>()), BigInt(den));
  }
  throw InputError("expected rational as [numerator, denominator], got " + j.dump());
}

json bigint_to_json(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max()) {
    return json(static_cast<std::int64_t>(v));
  }
  return json(v.str());
}

json point_to_json(const Point& p) { return json::array({rational_to_json(p.x), rational_to_json(p.y)}); }

Point point_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2) throw InputError("expected point as [x, y], got " + j.dump());
  return Point{rational_from_json(j[0]), rational_from_json(j[1])};
}

namespace {

CurveEnd end_from_json(const json& j) {
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "start") return CurveEnd::Start;
    if (s == "end") return CurveEnd::End;
  } else if (j.is_number_integer()) {
    const auto v = j.get<int>();
    if (v == 0) return CurveEnd::Start;
    if (v == 1) return CurveEnd::End;
  }
  throw InputError("curve end must be \"start\" or \"end\", got " + j.dump());
}

const char* end_name(CurveEnd e) { return e == CurveEnd::Start ? "start" : "end"; }

std::string curve_label(CurveId id) { return "curve " + std::to_string(id); }

void validate_polyline(const Curve& c) {
  const auto& p = c.points;
  if (p.size() < 2) throw InputError(curve_label(c.id) + ": polyline needs at least 2 points");
  for (std::size_t i = 0; i + 1 < p.size(); ++i) {
    if (p[i] == p[i + 1]) throw InputError(curve_label(c.id) + ": self-intersecting (repeated point)");
  }
  if (p.front() == p.back()) throw InputError(curve_label(c.id) + ": coincident endpoints");
  const std::size_t segs = p.size() - 1;
  for (std::size_t i = 0; i < segs; ++i) {
    for (std::size_t j = i + 1; j < segs; ++j) {
      const auto hit = intersect_segments(p[i], p[i + 1], p[j], p[j + 1]);
      if (hit.contact == SegmentContact::None) continue;
      if (j == i + 1 && hit.contact == SegmentContact::Touching && hit.point == p[j]) continue;
      throw InputError(curve_label(c.id) + ": self-intersecting polyline (segments " + std::to_string(i) +
                       " and " + std::to_string(j) + ")");
    }
  }
}

void validate_geometric(const StringScene& s) {
  for (const Curve& c : s.curves) {
    if (!c.crossings.empty()) throw InputError(curve_label(c.id) + ": mixes points and crossings");
    validate_polyline(c);
  }
  for (const Disk& d : s.disks) {
    if (!d.centre) throw InputError("disk " + std::to_string(d.id) + ": geometric scene needs a centre");
    if (d.radius <= 0) throw InputError("disk " + std::to_string(d.id) + ": radius must be positive");
  }
  for (std::size_t i = 0; i < s.disks.size(); ++i) {
    for (std::size_t j = i + 1; j < s.disks.size(); ++j) {
      const Rational sum = s.disks[i].radius + s.disks[j].radius;
      if (squared_distance(*s.disks[i].centre, *s.disks[j].centre) <= sum * sum) {
        throw InputError("disk " + std::to_string(s.disks[i].id) + " overlaps disk " + std::to_string(s.disks[j].id));
      }
    }
  }
  for (const Curve& c : s.curves) {
    const auto& p = c.points;
    const std::size_t last = p.size() - 1;
    for (const Disk& d : s.disks) {
      const Point& o = *d.centre;
      const Rational r2 = d.radius * d.radius;
      const bool grounded_here = c.grounded && c.grounded->disk == d.id;
      for (std::size_t i = 0; i < last; ++i) {
        const bool at_start = grounded_here && c.grounded->end == CurveEnd::Start && i == 0;
        const bool at_end = grounded_here && c.grounded->end == CurveEnd::End && i + 1 == last;
        const Rational m = squared_distance_to_segment(o, p[i], p[i + 1]);
        if (m > r2) continue;
        if (m == r2 && (at_start || at_end)) {
          // Only the grounded endpoint may touch, and the segment must leave outward.
          const Point& foot = at_start ? p[i] : p[i + 1];
          const Point& other = at_start ? p[i + 1] : p[i];
          if (squared_distance(o, foot) == r2 && dot(foot, other, Point{2 * foot.x - o.x, 2 * foot.y - o.y}) > 0) {
            continue;
          }
        }
        throw InputError(curve_label(c.id) + " enters or touches disk " + std::to_string(d.id));
      }
    }
    if (c.grounded) {
      const Disk& d = s.disk(c.grounded->disk);
      const Point& foot = c.grounded->end == CurveEnd::Start ? p.front() : p.back();
      if (squared_distance(*d.centre, foot) != d.radius * d.radius) {
        throw InputError(curve_label(c.id) + ": grounded end is not on the boundary of disk " + std::to_string(d.id));
      }
    }
  }
}

void validate_abstract(const StringScene& s) {
  std::map<std::string, std::vector<CurveId>> seen;
  for (const Curve& c : s.curves) {
    if (!c.points.empty()) throw InputError(curve_label(c.id) + ": mixes points and crossings");
    std::set<std::string> local;
    for (const auto& x : c.crossings) {
      if (!local.insert(x).second) {
        throw InputError(curve_label(c.id) + ": crossing '" + x + "' repeated along the curve");
      }
      seen[x].push_back(c.id);
    }
  }
  for (const auto& [label, owners] : seen) {
    if (owners.size() != 2) {
      throw InputError("crossing '" + label + "' must reference exactly two distinct curves");
    }
  }
  for (const auto& [label, sign] : s.chirality) {
    if (!seen.contains(label)) throw InputError("chirality given for unknown crossing '" + label + "'");
    if (sign != 1 && sign != -1) throw InputError("chirality of '" + label + "' must be +1 or -1");
  }
  for (const auto& [cid, seg] : s.twists) {
    const Curve& c = s.curve(cid);
    if (seg < 0 || seg > static_cast<int>(c.crossings.size())) {
      throw InputError(curve_label(cid) + ": twist on nonexistent segment " + std::to_string(seg));
    }
  }
  for (const Disk& d : s.disks) {
    std::set<std::pair<CurveId, CurveEnd>> listed(d.boundary.begin(), d.boundary.end());
    if (listed.size() != d.boundary.size()) {
      throw InputError("disk " + std::to_string(d.id) + ": boundary order repeats a curve end");
    }
    for (const auto& [cid, end] : d.boundary) {
      const Curve& c = s.curve(cid);
      if (!c.grounded || c.grounded->disk != d.id || c.grounded->end != end) {
        throw InputError("disk " + std::to_string(d.id) + ": boundary lists " + curve_label(cid) +
                         " which is not grounded there");
      }
    }
  }
  for (const Curve& c : s.curves) {
    if (!c.grounded) continue;
    const Disk& d = s.disk(c.grounded->disk);
    const auto key = std::make_pair(c.id, c.grounded->end);
    if (std::find(d.boundary.begin(), d.boundary.end(), key) == d.boundary.end()) {
      throw InputError(curve_label(c.id) + ": grounded on disk " + std::to_string(d.id) +
                       " but missing from its boundary order");
    }
  }
}

}  // namespace

void validate_scene(const StringScene& s) {
  std::set<CurveId> ids;
  for (const Curve& c : s.curves) {
    if (c.id < 0) throw InputError("curve ids must be non-negative, got " + std::to_string(c.id));
    if (!ids.insert(c.id).second) throw InputError("duplicate curve id " + std::to_string(c.id));
    if (c.grounded) s.disk(c.grounded->disk);
  }
  std::set<int> disk_ids;
  for (const Disk& d : s.disks) {
    if (!disk_ids.insert(d.id).second) throw InputError("duplicate disk id " + std::to_string(d.id));
  }
  if (s.mode == SceneMode::Geometric) {
    if (!s.twists.empty() || !s.chirality.empty()) {
      throw InputError("chirality and twists are only meaningful for abstract scenes");
    }
    validate_geometric(s);
  } else {
    validate_abstract(s);
  }
}

StringScene parse_scene(const json& j) {
  if (!j.is_object() || !j.contains("curves") || !j["curves"].is_array()) {
    throw InputError("scene JSON must be an object with a 'curves' array");
  }
  StringScene s;
  bool any_points = false;
  bool any_crossings = false;
  for (const json& jc : j["curves"]) {
    Curve c;
    if (!jc.contains("id") || !jc["id"].is_number_integer()) throw InputError("curve without integer 'id'");
    c.id = jc["id"].get<int>();
    if (jc.contains("points")) {
      any_points = true;
      for (const json& p : jc["points"]) c.points.push_back(point_from_json(p));
    }
    if (jc.contains("crossings")) {
      any_crossings = true;
      for (const json& x : jc["crossings"]) {
        c.crossings.push_back(x.is_string() ? x.get<std::string>() : x.dump());
      }
    }
    if (jc.contains("points") == jc.contains("crossings")) {
      throw InputError(curve_label(c.id) + ": needs exactly one of 'points' or 'crossings'");
    }
    if (jc.contains("grounded") && !jc["grounded"].is_null()) {
      const json& g = jc["grounded"];
      c.grounded = Grounding{g.at("disk").get<int>(), end_from_json(g.at("end"))};
    }
    s.curves.push_back(std::move(c));
  }
  if (any_points && any_crossings) throw InputError("scene mixes geometric and abstract curves");
  s.mode = any_crossings ? SceneMode::Abstract : SceneMode::Geometric;
  std::sort(s.curves.begin(), s.curves.end(), [](const Curve& a, const Curve& b) { return a.id < b.id; });

  if (j.contains("disks")) {
    for (const json& jd : j["disks"]) {
      Disk d;
      d.id = jd.at("id").get<int>();
      if (jd.contains("center")) d.centre = point_from_json(jd["center"]);
      if (jd.contains("radius")) d.radius = rational_from_json(jd["radius"]);
      if (jd.contains("boundary")) {
        for (const json& b : jd["boundary"]) d.boundary.emplace_back(b.at(0).get<int>(), end_from_json(b.at(1)));
      }
      s.disks.push_back(std::move(d));
    }
    std::sort(s.disks.begin(), s.disks.end(), [](const Disk& a, const Disk& b) { return a.id < b.id; });
  }
  if (j.contains("chirality")) {
    for (const auto& [k, v] : j["chirality"].items()) s.chirality[k] = v.get<int>();
  }
  if (j.contains("twists")) {
    for (const json& t : j["twists"]) s.twists.emplace(t.at("curve").get<int>(), t.at("segment").get<int>());
  }
  if (j.contains("colours")) {
    for (const auto& [k, v] : j["colours"].items()) s.colours[std::stoi(k)] = v.get<int>();
  }
  validate_scene(s);
  return s;
}

StringScene load_scene(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open scene file " + path.string());
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw InputError("parse error in " + path.string() + ": " + e.what());
  }
  return parse_scene(j);
}

json scene_to_json(const StringScene& s) {
  json j;
  j["curves"] = json::array();
  for (const Curve& c : s.curves) {
    json jc;
    jc["id"] = c.id;
    if (s.mode == SceneMode::Geometric) {
      jc["points"] = json::array();
      for (const Point& p : c.points) jc["points"].push_back(point_to_json(p));
    } else {
      jc["crossings"] = c.crossings;
    }
    if (c.grounded) jc["grounded"] = {{"disk", c.grounded->disk}, {"end", end_name(c.grounded->end)}};
    j["curves"].push_back(std::move(jc));
  }
  if (!s.disks.empty()) {
    j["disks"] = json::array();
    for (const Disk& d : s.disks) {
      json jd;
      jd["id"] = d.id;
      if (d.centre) {
        jd["center"] = point_to_json(*d.centre);
        jd["radius"] = rational_to_json(d.radius);
      }
      if (!d.boundary.empty()) {
        jd["boundary"] = json::array();
        for (const auto& [cid, end] : d.boundary) jd["boundary"].push_back(json::array({cid, end_name(end)}));
      }
      j["disks"].push_back(std::move(jd));
    }
  }
  if (!s.chirality.empty()) j["chirality"] = s.chirality;
  if (!s.twists.empty()) {
    j["twists"] = json::array();
    for (const auto& [cid, seg] : s.twists) j["twists"].push_back({{"curve", cid}, {"segment", seg}});
  }
  if (!s.colours.empty()) {
    json jc = json::object();
    for (const auto& [cid, col] : s.colours) jc[std::to_string(cid)] = col;
    j["colours"] = std::move(jc);
  }
  return j;
}

StringScene perturb(const StringScene& scene, std::uint64_t seed, const Rational& magnitude) {
  if (scene.mode != SceneMode::Geometric) throw InputError("perturb applies to geometric scenes only");
  StringScene out = scene;
  std::mt19937_64 rng(seed);
  constexpr std::int64_t kSteps = 1 << 20;
  std::uniform_int_distribution<std::int64_t> step(-kSteps, kSteps);
  for (Curve& c : out.curves) {
    for (std::size_t i = 0; i < c.points.size(); ++i) {
      const bool pinned = c.grounded && ((c.grounded->end == CurveEnd::Start && i == 0) ||
                                         (c.grounded->end == CurveEnd::End && i + 1 == c.points.size()));
      const Rational dx = magnitude * Rational(step(rng), kSteps);
      const Rational dy = magnitude * Rational(step(rng), kSteps);
      if (pinned) continue;  // grounded feet stay on their circle
      c.points[i].x += dx;
      c.points[i].y += dy;
    }
  }
  validate_scene(out);
  return out;
}

}  // namespace strandkit
