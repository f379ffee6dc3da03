#include "strandkit/arrangement.hpp"
#include "strandkit/error.hpp"
#include "strandkit/scene.hpp"

#include "support.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace strandkit;
using testsupport::P;

namespace {

std::string load_error(const std::string& text) {
  try {
    testsupport::scene_from(text);
  } catch (const InputError& e) {
    return e.what();
  }
  return "";
}

std::string arrangement_error(const StringScene& s) {
  try {
    compute_arrangement(s);
  } catch (const InputError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST(Scene, PlusSignLoads) {
  const auto s = testsupport::fixture("plus.json");
  EXPECT_EQ(s.mode, SceneMode::Geometric);
  EXPECT_EQ(s.curves.size(), 2u);
  EXPECT_TRUE(s.disks.empty());
}

TEST(Scene, FigureOneLoadsWithTenCurvesAndFiveColours) {
  const auto s = testsupport::fixture("fig1.json");
  EXPECT_EQ(s.curves.size(), 10u);
  std::set<int> colours;
  for (const auto& [c, col] : s.colours) colours.insert(col);
  EXPECT_EQ(colours.size(), 5u);
}

TEST(Scene, RejectsRepeatedPoint) {
  EXPECT_NE(load_error(R"({"curves":[{"id":0,"points":[[0,0],[1,0],[1,1],[1,0],[2,5]]}]})").find("self-intersecting"),
            std::string::npos);
  EXPECT_NE(load_error(R"({"curves":[{"id":0,"points":[[0,0],[1,0],[1,0],[2,0]]}]})").find("self-intersecting"),
            std::string::npos);
}

TEST(Scene, RejectsSelfCrossingPolyline) {
  const auto msg = load_error(R"({"curves":[{"id":3,"points":[[0,0],[2,2],[2,0],[0,2]]}]})");
  EXPECT_NE(msg.find("self-intersecting"), std::string::npos);
  EXPECT_NE(msg.find("curve 3"), std::string::npos);
}

TEST(Scene, RejectsCoincidentEndpoints) {
  EXPECT_NE(load_error(R"({"curves":[{"id":0,"points":[[0,0],[1,0],[1,1],[0,0]]}]})").find("coincident endpoints"),
            std::string::npos);
}

TEST(Scene, RejectsOverlappingDisks) {
  const auto msg = load_error(R"({"curves":[],"disks":[{"id":0,"center":[0,0],"radius":1},
                                                       {"id":1,"center":[2,0],"radius":1}]})");
  EXPECT_NE(msg.find("disk 0 overlaps disk 1"), std::string::npos);
}

TEST(Scene, GroundedEndMustSitOnTheCircleAndLeaveOutward) {
  EXPECT_EQ(load_error(R"({"curves":[{"id":0,"points":[[1,0],[3,0]],"grounded":{"disk":0,"end":"start"}}],
                           "disks":[{"id":0,"center":[0,0],"radius":1}]})"),
            "");
  EXPECT_NE(load_error(R"({"curves":[{"id":0,"points":[[1,0],[-3,0]],"grounded":{"disk":0,"end":"start"}}],
                           "disks":[{"id":0,"center":[0,0],"radius":1}]})"),
            "");
  EXPECT_NE(load_error(R"({"curves":[{"id":0,"points":[[2,0],[3,0]],"grounded":{"disk":0,"end":"start"}}],
                           "disks":[{"id":0,"center":[0,0],"radius":1}]})"),
            "");
  EXPECT_NE(load_error(R"({"curves":[{"id":0,"points":[[-3,0],[3,0]]}],
                           "disks":[{"id":0,"center":[0,0],"radius":1}]})").find("enters or touches disk 0"),
            std::string::npos);
}

TEST(Scene, AbstractLabelsNeedTwoCurves) {
  EXPECT_NE(load_error(R"({"curves":[{"id":0,"crossings":["x"]},{"id":1,"crossings":[]}]})"), "");
  EXPECT_NE(load_error(R"({"curves":[{"id":0,"crossings":["x","x"]},{"id":1,"crossings":["x"]}]})"), "");
  EXPECT_NE(load_error(R"({"curves":[{"id":0,"crossings":["x"]},{"id":1,"points":[[0,0],[1,1]]}]})"), "");
  EXPECT_EQ(load_error(R"({"curves":[{"id":0,"crossings":["x"]},{"id":1,"crossings":["x"]}],"chirality":{"x":-1}})"), "");
  EXPECT_NE(load_error(R"({"curves":[{"id":0,"crossings":["x"]},{"id":1,"crossings":["x"]}],"chirality":{"x":2}})"), "");
}

TEST(Arrangement, PlusSignHasOneEventAtOrigin) {
  const auto arr = compute_arrangement(testsupport::plus_sign());
  ASSERT_EQ(arr.events.size(), 1u);
  EXPECT_EQ(*arr.events[0].location, P(0, 0));
  EXPECT_EQ(arr.events[0].curve_a, 0);
  EXPECT_EQ(arr.events[0].curve_b, 1);
  EXPECT_EQ(arr.events[0].chirality, 1);
}

TEST(Arrangement, TriangleOfSegments) {
  const auto s = testsupport::segments({{0, 0, 10, 0}, {1, -1, 6, 9}, {9, -1, 4, 9}});
  const auto arr = compute_arrangement(s);
  EXPECT_EQ(arr.events.size(), 3u);
  for (std::size_t i = 0; i < s.curves.size(); ++i) {
    for (std::size_t j = i + 1; j < s.curves.size(); ++j) {
      EXPECT_EQ(testsupport::brute_force_crossings(s.curves[i].points, s.curves[j].points), 1);
    }
  }
}

TEST(Arrangement, DisjointSegments) {
  EXPECT_TRUE(compute_arrangement(testsupport::segments({{0, 0, 1, 0}, {0, 1, 1, 1}})).events.empty());
}

TEST(Arrangement, EventsSortedAlongEachCurve) {
  const auto arr = compute_arrangement(testsupport::fixture("triple_pair.json"));
  ASSERT_EQ(arr.events.size(), 3u);
  EXPECT_EQ(arr.events_on(0), (std::vector<int>{0, 1, 2}));
  EXPECT_EQ(arr.events_on(1), (std::vector<int>{0, 1, 2}));
  EXPECT_EQ(*arr.events[1].location, P(Rational(5, 2), Rational(0)));
  // alternating directions of the zigzag
  EXPECT_EQ(arr.events[0].chirality, 1);
  EXPECT_EQ(arr.events[1].chirality, -1);
  EXPECT_EQ(arr.events[2].chirality, 1);
}

TEST(Arrangement, DegeneraciesAreRejected) {
  EXPECT_NE(arrangement_error(testsupport::fixture("tangency.json")).find("degenerate"), std::string::npos);
  EXPECT_NE(arrangement_error(testsupport::segments({{0, 0, 4, 0}, {2, 0, 6, 0}})).find("overlap"), std::string::npos);
  EXPECT_NE(arrangement_error(testsupport::segments({{0, 0, 4, 0}, {2, 0, 2, 3}})).find("endpoint"), std::string::npos);
  EXPECT_NE(arrangement_error(testsupport::segments({{-1, 0, 1, 0}, {0, -1, 0, 1}, {-1, -1, 1, 1}})).find("three"),
            std::string::npos);
}

TEST(Arrangement, IntersectionGraphIsSimple) {
  const auto arr = compute_arrangement(testsupport::fixture("triple_pair.json"));
  const auto ig = intersection_graph(arr);
  EXPECT_EQ(ig.graph.num_vertices(), 2);
  EXPECT_EQ(ig.graph.num_edges(), 1);
}

TEST(Arrangement, FigureOneCentralCurveDegree) {
  const auto ig = intersection_graph(compute_arrangement(testsupport::fixture("fig1.json")));
  EXPECT_EQ(ig.graph.num_vertices(), 10);
  EXPECT_EQ(ig.graph.degree(ig.index_of(0)), 9);
  EXPECT_TRUE(ig.graph.has_edge(ig.index_of(1), ig.index_of(3)));
}

TEST(Arrangement, MatchesBruteForceOnRandomScenes) {
  std::mt19937_64 rng(2024);
  int checked = 0;
  for (int trial = 0; trial < 400 && checked < 60; ++trial) {
    const auto j = testsupport::random_polylines(rng, 2 + trial % 19, 3);
    StringScene s;
    Arrangement arr;
    try {
      s = parse_scene(j);
      arr = compute_arrangement(s);
    } catch (const InputError&) {
      continue;
    }
    ++checked;
    std::map<std::pair<int, int>, int> count;
    for (const auto& e : arr.events) ++count[{e.curve_a, e.curve_b}];
    for (std::size_t a = 0; a < s.curves.size(); ++a) {
      for (std::size_t b = a + 1; b < s.curves.size(); ++b) {
        const int expect = testsupport::brute_force_crossings(s.curves[a].points, s.curves[b].points);
        ASSERT_EQ((count[{s.curves[a].id, s.curves[b].id}]), expect);
      }
    }
  }
  EXPECT_GE(checked, 40);
}

TEST(Arrangement, ReloadIsBitExact) {
  std::mt19937_64 rng(99);
  int checked = 0;
  for (int trial = 0; trial < 200 && checked < 20; ++trial) {
    StringScene s;
    try {
      s = parse_scene(testsupport::random_polylines(rng, 6, 2));
      compute_arrangement(s);
    } catch (const InputError&) {
      continue;
    }
    ++checked;
    const auto again = parse_scene(nlohmann::json::parse(scene_to_json(s).dump()));
    EXPECT_EQ(events_to_json(compute_arrangement(s)).dump(), events_to_json(compute_arrangement(again)).dump());
    EXPECT_EQ(scene_to_json(s).dump(), scene_to_json(again).dump());
  }
}

TEST(Arrangement, AbstractFormRoundTrip) {
  const auto s = testsupport::fixture("triple_pair.json");
  const auto arr = compute_arrangement(s);
  const auto abs = to_abstract(s, arr);
  const auto arr2 = compute_arrangement(abs);
  ASSERT_EQ(arr2.events.size(), arr.events.size());
  for (std::size_t i = 0; i < arr.events.size(); ++i) {
    EXPECT_EQ(arr2.events[i].chirality, arr.events[i].chirality);
    EXPECT_EQ(arr2.events[i].index_in_b, arr.events[i].index_in_b);
  }
}

TEST(Arrangement, GeometricBoundaryOrderIsCounterClockwise) {
  const auto s = testsupport::fixture("outerstring3.json");
  const auto order = boundary_order(s, 0);
  // feet at angles 90 (curve 0), 180 (curve 1), 270 (curve 2)
  ASSERT_EQ(order.size(), 3u);
  EXPECT_EQ(order[0].first, 0);
  EXPECT_EQ(order[1].first, 1);
  EXPECT_EQ(order[2].first, 2);
}

TEST(Scene, PerturbIsDeterministic) {
  const auto s = testsupport::fixture("fig1.json");
  const auto a = perturb(s, 5, Rational(1, 100));
  const auto b = perturb(s, 5, Rational(1, 100));
  EXPECT_EQ(scene_to_json(a).dump(), scene_to_json(b).dump());
  EXPECT_NE(scene_to_json(a).dump(), scene_to_json(s).dump());
  EXPECT_EQ(compute_arrangement(a).events.size(), compute_arrangement(s).events.size());
}
