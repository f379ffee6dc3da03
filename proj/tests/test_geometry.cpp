#include "strandkit/geometry.hpp"

#include "support.hpp"

#include <gtest/gtest.h>

using namespace strandkit;
using testsupport::P;

TEST(Geometry, ProperCrossingIsExact) {
  const auto hit = intersect_segments(P(0, 0), P(3, 3), P(0, 3), P(3, 0));
  EXPECT_EQ(hit.contact, SegmentContact::Proper);
  EXPECT_EQ(hit.point, P(Rational(3, 2), Rational(3, 2)));
  EXPECT_EQ(hit.param_a, Rational(1, 2));
  EXPECT_EQ(hit.param_b, Rational(1, 2));
}

TEST(Geometry, ThirdsAreNotRounded) {
  const auto hit = intersect_segments(P(0, 0), P(3, 1), P(1, -1), P(1, 1));
  ASSERT_EQ(hit.contact, SegmentContact::Proper);
  EXPECT_EQ(hit.point, P(Rational(1), Rational(1, 3)));
}

TEST(Geometry, ContactKinds) {
  EXPECT_EQ(intersect_segments(P(0, 0), P(1, 0), P(0, 1), P(1, 1)).contact, SegmentContact::None);
  EXPECT_EQ(intersect_segments(P(0, 0), P(2, 0), P(1, 0), P(1, 1)).contact, SegmentContact::Touching);
  EXPECT_EQ(intersect_segments(P(0, 0), P(2, 0), P(1, 0), P(3, 0)).contact, SegmentContact::Overlap);
  EXPECT_EQ(intersect_segments(P(0, 0), P(1, 0), P(1, 0), P(2, 0)).contact, SegmentContact::Touching);
  EXPECT_EQ(intersect_segments(P(0, 0), P(1, 0), P(2, 0), P(3, 0)).contact, SegmentContact::None);
}

TEST(Geometry, SegmentDistance) {
  EXPECT_EQ(squared_distance_to_segment(P(0, 1), P(-1, 0), P(1, 0)), 1);
  EXPECT_EQ(squared_distance_to_segment(P(3, 0), P(-1, 0), P(1, 0)), 4);
}

TEST(Geometry, RationalCirclePointsLieOnTheCircle) {
  const Point c = P(2, -1);
  const Rational r(7, 3);
  for (int k = -6; k <= 6; ++k) {
    const Point q = rational_circle_point(c, r, Rational(k, 4));
    EXPECT_EQ(squared_distance(c, q), r * r);
  }
  EXPECT_EQ(rational_circle_point(c, r, 0), P(Rational(2) + r, Rational(-1)));
}

TEST(Geometry, AngleOrderIsCounterClockwiseFromPositiveX) {
  const std::vector<Point> dirs{P(1, 0), P(1, 1), P(0, 1), P(-1, 1), P(-1, 0), P(-1, -1), P(0, -1), P(1, -1)};
  for (std::size_t i = 0; i < dirs.size(); ++i) {
    for (std::size_t j = 0; j < dirs.size(); ++j) {
      EXPECT_EQ(angle_less(dirs[i], dirs[j]), i < j) << i << " " << j;
    }
  }
}
