#include "strandkit/arrangement.hpp"
#include "strandkit/colouring.hpp"
#include "strandkit/error.hpp"

#include "support.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace strandkit;

namespace {

IntersectionGraph as_ig(const Graph& g) {
  IntersectionGraph ig;
  ig.graph = g;
  for (int v = 0; v < g.num_vertices(); ++v) ig.ids.push_back(v);
  return ig;
}

std::vector<int> natural(int n) {
  std::vector<int> o(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) o[static_cast<std::size_t>(i)] = i;
  return o;
}

std::vector<int> colour_vector(const OrderedColouring& c, int n) {
  std::vector<int> out;
  for (int v = 0; v < n; ++v) out.push_back(c(v));
  return out;
}

}  // namespace

TEST(Greedy, K2) {
  const auto c = greedy_colouring(as_ig(complete_graph(2)), {0, 1});
  EXPECT_EQ(c(0), 1);
  EXPECT_EQ(c(1), 2);
  EXPECT_EQ(c.t, 2);
}

TEST(Greedy, FiveCycleNeedsThree) {
  EXPECT_EQ(greedy_colouring(as_ig(cycle_graph(5)), natural(5)).t, 3);
}

TEST(Greedy, Edgeless) {
  const auto c = greedy_colouring(as_ig(Graph(4)), natural(4));
  EXPECT_EQ(c.t, 1);
  for (int v = 0; v < 4; ++v) EXPECT_EQ(c(v), 1);
}

TEST(Greedy, RejectsNonPermutation) {
  EXPECT_THROW(greedy_colouring(as_ig(path_graph(3)), {0, 0, 1}), InputError);
}

TEST(DegeneracyOrder, BackDegrees) {
  auto check = [](const Graph& g, int bound) {
    auto order = degeneracy_order(g);
    std::reverse(order.begin(), order.end());
    const auto back = back_degrees(g, order);
    EXPECT_LE(*std::max_element(back.begin(), back.end()), bound);
  };
  check(path_graph(8), 1);
  check(star_graph(6), 1);
  check(grid_graph(4, 4), 2);
  check(complete_graph(4), 3);
}

TEST(Params, PlusSign) {
  const auto arr = compute_arrangement(testsupport::plus_sign());
  OrderedColouring c;
  c.phi = {{0, 1}, {1, 2}};
  c.t = 2;
  const auto p = compute_params(arr, c);
  EXPECT_EQ(p.t, 2);
  EXPECT_EQ(p.d, 1);
  EXPECT_EQ(p.k, 1);
  EXPECT_EQ(p.r, 3);
}

TEST(Params, DistanceBoundFormula) {
  EXPECT_EQ(distance_bound(3, 2), 15);
  EXPECT_EQ(distance_bound(2, 1), 3);
  EXPECT_EQ(distance_bound(1, 5), 0);
  EXPECT_EQ(distance_bound(4, 0), 1);
}

TEST(Params, SameColourCrossingIsNamed) {
  const auto arr = compute_arrangement(testsupport::plus_sign());
  OrderedColouring c;
  c.phi = {{0, 1}, {1, 1}};
  c.t = 1;
  try {
    compute_params(arr, c);
    FAIL();
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("curves 0 and 1"), std::string::npos);
  }
}

TEST(Params, FragmentLocalD) {
  // curve 0 (colour 2) is cut by curve 1 (colour 1); curves 2 and 3 (colour 3)
  // lie on opposite sides of the cut, so d = 1 although curve 0 has 2 higher neighbours
  const auto arr = compute_arrangement(testsupport::segments({{0, 0, 10, 0}, {5, -1, 5, 1}, {2, -1, 2, 1}, {8, -1, 8, 1}}));
  OrderedColouring c;
  c.phi = {{0, 2}, {1, 1}, {2, 3}, {3, 3}};
  c.t = 3;
  const auto p = compute_params(arr, c);
  EXPECT_EQ(p.d, 1);
  EXPECT_EQ(p.k, 1);
}

TEST(Tdeg, Examples) {
  const Graph star = star_graph(4);
  std::vector<int> col{2, 1, 1, 1, 1};
  EXPECT_TRUE(verify_tdeg(star, col, 1).holds);
  // every proper 2-colouring of P_4 gives an interior vertex two higher neighbours
  EXPECT_FALSE(verify_tdeg(path_graph(4), {1, 2, 1, 2}, 1).holds);
  EXPECT_FALSE(verify_tdeg(path_graph(4), {2, 1, 2, 1}, 1).holds);
  EXPECT_TRUE(verify_tdeg(path_graph(4), {1, 2, 1, 2}, 2).holds);
  EXPECT_TRUE(verify_tdeg(path_graph(4), {1, 3, 2, 1}, 1).holds);
  EXPECT_TRUE(verify_tdeg(complete_graph(4), {1, 2, 3, 4}, 3).holds);
  const auto rep = verify_tdeg(complete_graph(4), {1, 2, 3, 4}, 2);
  EXPECT_FALSE(rep.holds);
  EXPECT_EQ(rep.counterexample, 0);
}

TEST(Tdeg, GreedyOnMaxDegreeGraphs) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 3 + trial % 12;
    Graph g(n);
    for (int i = 0; i < 2 * n; ++i) g.add_edge(static_cast<int>(rng() % n), static_cast<int>(rng() % n));
    auto order = natural(n);
    std::shuffle(order.begin(), order.end(), rng);
    const auto c = greedy_colouring(as_ig(g), order);
    const int delta = g.max_degree();
    EXPECT_LE(c.t, delta + 1);
    EXPECT_TRUE(verify_tdeg(g, colour_vector(c, n), delta).holds);
  }
}

TEST(Relabel, PermutationKeepsProperness) {
  OrderedColouring c;
  c.phi = {{0, 1}, {1, 2}, {2, 3}};
  c.t = 3;
  const auto r = relabel(c, {3, 1, 2});
  EXPECT_EQ(r(0), 3);
  EXPECT_EQ(r(1), 1);
  EXPECT_EQ(r(2), 2);
  const auto dense = relabel(colouring_from_json(nlohmann::json::parse(R"({"0":4,"1":9})")));
  EXPECT_EQ(dense(0), 1);
  EXPECT_EQ(dense(1), 2);
  EXPECT_EQ(dense.t, 2);
}

TEST(Params, MatchEnumerationOracleUnderPermutations) {
  std::mt19937_64 rng(23);
  int checked = 0;
  for (int trial = 0; trial < 200 && checked < 40; ++trial) {
    StringScene s;
    Arrangement arr;
    try {
      s = parse_scene(testsupport::random_polylines(rng, 5 + trial % 4, 2));
      arr = compute_arrangement(s);
    } catch (const InputError&) {
      continue;
    }
    ++checked;
    const auto ig = intersection_graph(arr);
    auto c = default_colouring(ig);
    std::vector<int> perm(static_cast<std::size_t>(c.t));
    for (int i = 0; i < c.t; ++i) perm[static_cast<std::size_t>(i)] = i + 1;
    std::shuffle(perm.begin(), perm.end(), rng);
    c = relabel(c, perm);
    const auto p = compute_params(arr, c);
    // oracle: walk each curve's event list, counting distinct higher curves between lower ones
    int d = 0, k = 0;
    for (CurveId g : arr.curves) {
      std::set<CurveId> lower;
      std::vector<std::set<CurveId>> frags(1);
      for (int e : arr.events_on(g)) {
        const auto& ev = arr.events[static_cast<std::size_t>(e)];
        const CurveId o = ev.curve_a == g ? ev.curve_b : ev.curve_a;
        if (c(o) < c(g)) {
          lower.insert(o);
          frags.emplace_back();
        } else {
          frags.back().insert(o);
        }
      }
      for (const auto& f : frags) d = std::max(d, static_cast<int>(f.size()));
      k = std::max(k, static_cast<int>(lower.size()));
    }
    EXPECT_EQ(p.d, d);
    EXPECT_EQ(p.k, k);
    EXPECT_LE(p.d, ig.graph.max_degree());
    EXPECT_LE(p.k, ig.graph.max_degree());
  }
  EXPECT_GE(checked, 20);
}
