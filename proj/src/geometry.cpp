#include "strandkit/geometry.hpp"

namespace strandkit {

Rational cross(const Point& o, const Point& a, const Point& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

Rational dot(const Point& o, const Point& a, const Point& b) {
  return (a.x - o.x) * (b.x - o.x) + (a.y - o.y) * (b.y - o.y);
}

int orientation(const Point& a, const Point& b, const Point& c) {
  const Rational v = cross(a, b, c);
  return v > 0 ? 1 : (v < 0 ? -1 : 0);
}

Rational squared_distance(const Point& a, const Point& b) {
  const Rational dx = a.x - b.x;
  const Rational dy = a.y - b.y;
  return dx * dx + dy * dy;
}

Rational squared_distance_to_segment(const Point& p, const Point& a, const Point& b) {
  const Rational len2 = squared_distance(a, b);
  if (len2 == 0) return squared_distance(p, a);
  Rational s = dot(a, p, b) / len2;
  if (s < 0) s = 0;
  if (s > 1) s = 1;
  const Point q{a.x + s * (b.x - a.x), a.y + s * (b.y - a.y)};
  return squared_distance(p, q);
}

bool on_segment(const Point& p, const Point& a, const Point& b) {
  if (orientation(a, b, p) != 0) return false;
  return p.x >= std::min(a.x, b.x) && p.x <= std::max(a.x, b.x) && p.y >= std::min(a.y, b.y) &&
         p.y <= std::max(a.y, b.y);
}

SegmentIntersection intersect_segments(const Point& a0, const Point& a1, const Point& b0,
                                       const Point& b1) {
  SegmentIntersection out;
  const int o1 = orientation(a0, a1, b0);
  const int o2 = orientation(a0, a1, b1);
  const int o3 = orientation(b0, b1, a0);
  const int o4 = orientation(b0, b1, a1);

  if (o1 == 0 && o2 == 0) {
    // Collinear: project onto the dominant axis.
    const bool use_x = a0.x != a1.x;
    auto key = [&](const Point& p) { return use_x ? p.x : p.y; };
    Rational alo = key(a0), ahi = key(a1), blo = key(b0), bhi = key(b1);
    if (alo > ahi) std::swap(alo, ahi);
    if (blo > bhi) std::swap(blo, bhi);
    const Rational lo = std::max(alo, blo);
    const Rational hi = std::min(ahi, bhi);
    if (lo > hi) return out;
    if (lo < hi) {
      out.contact = SegmentContact::Overlap;
      return out;
    }
    // Single shared point, necessarily an endpoint.
    for (const Point* p : {&a0, &a1}) {
      if (key(*p) == lo) out.point = *p;
    }
    out.contact = SegmentContact::Touching;
    out.param_a = (out.point == a0) ? Rational(0) : Rational(1);
    out.param_b = (out.point == b0) ? Rational(0) : (out.point == b1 ? Rational(1) : Rational(0));
    return out;
  }

  if (o1 * o2 > 0 || o3 * o4 > 0) return out;

  // Lines meet in exactly one point; parametrise along both segments.
  const Rational denom = (a1.x - a0.x) * (b1.y - b0.y) - (a1.y - a0.y) * (b1.x - b0.x);
  const Rational ta = ((b0.x - a0.x) * (b1.y - b0.y) - (b0.y - a0.y) * (b1.x - b0.x)) / denom;
  const Rational tb = ((b0.x - a0.x) * (a1.y - a0.y) - (b0.y - a0.y) * (a1.x - a0.x)) / denom;
  out.param_a = ta;
  out.param_b = tb;
  out.point = Point{a0.x + ta * (a1.x - a0.x), a0.y + ta * (a1.y - a0.y)};
  const bool interior = o1 != 0 && o2 != 0 && o3 != 0 && o4 != 0;
  out.contact = interior ? SegmentContact::Proper : SegmentContact::Touching;
  return out;
}

Point rational_circle_point(const Point& centre, const Rational& radius, const Rational& u) {
  const Rational denom = 1 + u * u;
  return Point{centre.x + radius * (1 - u * u) / denom, centre.y + radius * (2 * u) / denom};
}

namespace {
int half_plane(const Point& d) {
  // 0 for angles in [0, pi), 1 for [pi, 2pi)
  if (d.y > 0 || (d.y == 0 && d.x > 0)) return 0;
  return 1;
}
}  // namespace

bool angle_less(const Point& d1, const Point& d2) {
  const int h1 = half_plane(d1);
  const int h2 = half_plane(d2);
  if (h1 != h2) return h1 < h2;
  const Rational c = d1.x * d2.y - d1.y * d2.x;
  return c > 0;
}

double to_double(const Rational& r) { return static_cast<double>(r); }

std::string to_string(const Rational& r) { return r.str(); }

}  // namespace strandkit
