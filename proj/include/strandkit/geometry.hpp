#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <vector>

namespace strandkit {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

struct Point {
  Rational x;
  Rational y;

  friend bool operator==(const Point&, const Point&) = default;
  friend auto operator<=>(const Point& a, const Point& b) {
    if (a.x != b.x) return a.x < b.x ? std::strong_ordering::less : std::strong_ordering::greater;
    if (a.y != b.y) return a.y < b.y ? std::strong_ordering::less : std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }
};

Rational cross(const Point& o, const Point& a, const Point& b);
Rational dot(const Point& o, const Point& a, const Point& b);
int orientation(const Point& a, const Point& b, const Point& c);
Rational squared_distance(const Point& a, const Point& b);

/// Squared distance from `p` to the closed segment [a, b].
Rational squared_distance_to_segment(const Point& p, const Point& a, const Point& b);

/// True iff `p` lies on the closed segment [a, b].
bool on_segment(const Point& p, const Point& a, const Point& b);

/// How two closed segments meet.
enum class SegmentContact {
  None,
  Proper,     // single interior point of both, transversal
  Touching,   // single point that is an endpoint of at least one segment
  Overlap,    // collinear with a shared piece of positive length
};

struct SegmentIntersection {
  SegmentContact contact = SegmentContact::None;
  Point point;       // valid for Proper and Touching
  Rational param_a;  // position along the first segment, in [0, 1]
  Rational param_b;
};

SegmentIntersection intersect_segments(const Point& a0, const Point& a1, const Point& b0,
                                       const Point& b1);

/// Rational point on the circle of the given centre and radius, from the
/// stereographic parameter `u` (u = 0 gives the rightmost point).
Point rational_circle_point(const Point& centre, const Rational& radius, const Rational& u);

/// Compares directions by counter-clockwise angle in [0, 2pi).
bool angle_less(const Point& d1, const Point& d2);

double to_double(const Rational& r);
std::string to_string(const Rational& r);

}  // namespace strandkit
