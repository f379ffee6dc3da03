#pragma once

#include "strandkit/geometry.hpp"

#include <json.hpp>

#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace strandkit {

using CurveId = int;

enum class CurveEnd { Start = 0, End = 1 };

struct Grounding {
  int disk = 0;
  CurveEnd end = CurveEnd::Start;
  friend bool operator==(const Grounding&, const Grounding&) = default;
};

/// One string. Exactly one of `points` (geometric mode) and `crossings`
/// (abstract mode: crossing labels in order along the curve) is used.
struct Curve {
  CurveId id = 0;
  std::vector<Point> points;
  std::vector<std::string> crossings;
  std::optional<Grounding> grounded;
};

/// A grounding disk. Geometric disks carry centre and radius; abstract disks
/// list the grounded curve ends in counter-clockwise order around the boundary.
struct Disk {
  int id = 0;
  std::optional<Point> centre;
  Rational radius;
  std::vector<std::pair<CurveId, CurveEnd>> boundary;
};

enum class SceneMode { Geometric, Abstract };

struct StringScene {
  SceneMode mode = SceneMode::Geometric;
  std::vector<Curve> curves;  // sorted by id
  std::vector<Disk> disks;    // sorted by id
  /// Abstract crossing label -> +1 / -1; missing labels default to +1.
  std::map<std::string, int> chirality;
  /// Abstract only: (curve, segment) pairs whose edge signature is -1.
  /// Segment i joins the i-th and (i+1)-th point of the curve's path
  /// (start endpoint, crossings..., end endpoint).
  std::set<std::pair<CurveId, int>> twists;
  /// Optional colour declarations carried by the file.
  std::map<CurveId, int> colours;

  const Curve& curve(CurveId id) const;
  const Disk& disk(int id) const;
  std::vector<CurveId> curve_ids() const;
};

/// Parses and validates; throws InputError naming the offending curve or disk.
StringScene parse_scene(const nlohmann::json& j);
StringScene load_scene(const std::filesystem::path& path);

/// Canonical JSON form: curves and disks sorted by id, rationals as [num, den].
nlohmann::json scene_to_json(const StringScene& scene);

/// Checks every type invariant that does not need the arrangement:
/// polylines simple with distinct endpoints, disks disjoint, curves outside
/// disk interiors, grounded ends on their disk, abstract labels well formed.
void validate_scene(const StringScene& scene);

nlohmann::json rational_to_json(const Rational& r);
Rational rational_from_json(const nlohmann::json& j);
nlohmann::json point_to_json(const Point& p);
/// Integer when it fits in int64, decimal string otherwise.
nlohmann::json bigint_to_json(const BigInt& v);
Point point_from_json(const nlohmann::json& j);

/// Deterministic seed-driven jitter of every polyline vertex by at most
/// `magnitude` per coordinate; the result is re-validated.
StringScene perturb(const StringScene& scene, std::uint64_t seed, const Rational& magnitude);

}  // namespace strandkit
