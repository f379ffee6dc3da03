#include "strandkit/arrangement.hpp"
#include "strandkit/colouring.hpp"
#include "strandkit/decomp.hpp"
#include "strandkit/error.hpp"
#include "strandkit/families.hpp"
#include "strandkit/planarise.hpp"
#include "strandkit/product_model.hpp"

#include "support.hpp"

#include <gtest/gtest.h>

using namespace strandkit;
using testsupport::brute_force_treewidth;
using testsupport::oracle_td_valid;

namespace {

bool valid(const TreeDecomposition& td, const Graph& g) {
  const bool ours = verify_td(td, g).valid;
  EXPECT_EQ(ours, oracle_td_valid(td.bags, td.tree_edges, g));
  return ours;
}

Graph random_graph(std::mt19937_64& rng, int n, int percent) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (static_cast<int>(rng() % 100) < percent) g.add_edge(u, v);
  return g;
}

Graph petersen() {
  Graph g(10);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(i, i + 5);
    g.add_edge(5 + i, 5 + (i + 2) % 5);
  }
  return g;
}

}  // namespace

TEST(VerifyTd, SmallCases) {
  const Graph p3 = path_graph(3);
  EXPECT_TRUE(valid({{{0, 1}, {1, 2}}, {{0, 1}}}, p3));
  EXPECT_EQ((TreeDecomposition{{{0, 1}, {1, 2}}, {{0, 1}}}).width(), 1);
  // edge 1-2 uncovered
  EXPECT_FALSE(valid({{{0, 1}, {2}}, {{0, 1}}}, p3));
  // vertex 1 in two bags that are not adjacent
  EXPECT_FALSE(valid({{{0, 1}, {0, 2}, {1, 2}}, {{0, 1}, {1, 2}}}, p3));
  // not a tree
  EXPECT_FALSE(valid({{{0, 1}, {1, 2}}, {}}, p3));
  EXPECT_FALSE(valid({{{0, 1, 2}, {1, 2}, {1}}, {{0, 1}, {1, 2}, {2, 0}}}, p3));
}

TEST(VerifyTd, RandomBagsAgreeWithOracle) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 400; ++trial) {
    const Graph g = random_graph(rng, 5, 40);
    TreeDecomposition td;
    const int nb = 1 + static_cast<int>(rng() % 4);
    for (int b = 0; b < nb; ++b) {
      std::vector<int> bag;
      for (int v = 0; v < 5; ++v)
        if (rng() % 2) bag.push_back(v);
      td.bags.push_back(bag);
      if (b > 0) td.tree_edges.emplace_back(static_cast<int>(rng() % static_cast<unsigned>(b)), b);
    }
    valid(td, g);
  }
}

TEST(ExactTreewidth, KnownValues) {
  EXPECT_EQ(exact_treewidth(complete_graph(4)).width, 3);
  EXPECT_EQ(exact_treewidth(grid_graph(4, 4)).width, 4);
  EXPECT_EQ(exact_treewidth(grid_graph(3, 5)).width, 3);
  EXPECT_EQ(exact_treewidth(star_graph(6)).width, 1);
  EXPECT_EQ(exact_treewidth(path_graph(7)).width, 1);
  EXPECT_EQ(exact_treewidth(cycle_graph(9)).width, 2);
  EXPECT_EQ(exact_treewidth(complete_bipartite(3, 3)).width, 3);
  EXPECT_EQ(exact_treewidth(petersen()).width, 4);
  EXPECT_EQ(exact_treewidth(Graph(3)).width, 0);
}

TEST(ExactTreewidth, WitnessIsValid) {
  for (const Graph& g : {grid_graph(4, 4), petersen(), wheel_graph(7), complete_bipartite(2, 5)}) {
    const auto tw = exact_treewidth(g);
    EXPECT_TRUE(valid(tw.witness, g));
    EXPECT_EQ(tw.witness.width(), tw.width);
  }
}

TEST(ExactTreewidth, MatchesBruteForce) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 60; ++trial) {
    const Graph g = random_graph(rng, 4 + trial % 4, 20 + 10 * (trial % 6));
    EXPECT_EQ(exact_treewidth(g).width, brute_force_treewidth(g)) << "trial " << trial;
  }
}

TEST(ExactTreewidth, RejectsLargeGraphs) {
  EXPECT_THROW(exact_treewidth(path_graph(17)), InputError);
}

TEST(Layering, BfsLayers) {
  const std::vector<int> centre{0};
  EXPECT_EQ(bfs_layering(wheel_graph(6), centre).num_layers(), 2);
  EXPECT_EQ(bfs_layering(path_graph(7), centre).num_layers(), 7);
  const std::vector<int> middle{3};
  EXPECT_EQ(bfs_layering(path_graph(7), middle).num_layers(), 4);
  const std::vector<int> corner{0};
  EXPECT_EQ(bfs_layering(grid_graph(2, 2), corner).num_layers(), 3);
  EXPECT_THROW(bfs_layering(Graph(2), centre), InputError);
  const auto l = bfs_layering(grid_graph(3, 4), corner);
  EXPECT_TRUE(verify_layering(l, grid_graph(3, 4)));
  EXPECT_FALSE(verify_layering(Layering{{0, 2}}, path_graph(2)));
}

TEST(Layering, LayeredWidth) {
  const TreeDecomposition td{{{0, 1, 2}, {2, 3}}, {{0, 1}}};
  EXPECT_EQ(layered_width(td, Layering{{0, 1, 1, 2}}), 2);
  EXPECT_EQ(layered_width(td, Layering{{0, 0, 0, 0}}), 3);
  const auto m = merge_layers(td, Layering{{0, 1, 1, 2}});
  EXPECT_EQ(m.layers, 3);
  EXPECT_EQ(m.layered_width, 2);
  EXPECT_EQ(m.implied_bound, 5);
}

TEST(RadiusDecomposition, WheelAndGrid) {
  const auto wheel = embedded_wheel(8);
  const auto td = radius_decomposition(wheel, 0);
  EXPECT_TRUE(valid(td, wheel.to_graph()));
  EXPECT_LE(td.width(), 4);

  const auto grid = embedded_grid(5, 5);
  const auto gtd = radius_decomposition(grid, 12);
  EXPECT_TRUE(valid(gtd, grid.to_graph()));
  EXPECT_LE(gtd.width(), 3 * 4 + 1);
  const std::vector<int> root{12};
  EXPECT_LE(layered_width(gtd, bfs_layering(grid.to_graph(), root)), 3);
}

TEST(RadiusDecomposition, RandomPlanarFixtures) {
  for (int trial = 0; trial < 40; ++trial) {
    const auto plane = random_planar_fixture(5 + trial, 10 * (trial % 6), 500 + static_cast<std::uint64_t>(trial));
    ASSERT_EQ(plane.euler_genus(), 0);
    const Graph g = plane.to_graph();
    const int root = trial % g.num_vertices();
    const auto td = radius_decomposition(plane, root);
    EXPECT_TRUE(valid(td, g)) << "trial " << trial;
    EXPECT_LE(td.width(), 3 * eccentricity(g, root) + 1);
    const std::vector<int> roots{root};
    EXPECT_LE(layered_width(td, bfs_layering(g, roots)), 3);
    if (g.num_vertices() <= 16) EXPECT_GE(td.width(), exact_treewidth(g).width);
  }
}

TEST(RadiusDecomposition, RejectsNonPlanar) {
  // K5 with half-edges in edge order at each vertex: a complete rotation
  // system, necessarily of positive genus
  EmbeddedGraph k5(5);
  std::vector<std::vector<int>> rot(5);
  for (int u = 0; u < 5; ++u)
    for (int v = u + 1; v < 5; ++v) {
      const int e = k5.add_edge(u, v);
      rot[static_cast<std::size_t>(u)].push_back(2 * e);
      rot[static_cast<std::size_t>(v)].push_back(2 * e + 1);
    }
  for (int v = 0; v < 5; ++v) k5.set_rotation(v, rot[static_cast<std::size_t>(v)]);
  ASSERT_GT(k5.euler_genus(), 0);
  EXPECT_THROW(radius_decomposition(k5, 0), InputError);
}

TEST(ProductLift, WidthAndValidity) {
  const Graph g = cycle_graph(5);
  const auto tw = exact_treewidth(g);
  for (int n = 1; n <= 3; ++n) {
    const auto lifted = product_lift(tw.witness, n);
    EXPECT_TRUE(valid(lifted, strong_product_with_clique(g, n)));
    EXPECT_EQ(lifted.width(), (tw.width + 1) * n - 1);
    const auto back = product_project(lifted, n);
    EXPECT_EQ(back.bags, tw.witness.bags);
  }
}

TEST(MinorLift, ContractedPath) {
  // P6 with branch sets {0,1}, {2,3}, {4,5} models P3
  const MinorModel m{path_graph(6), {{0, 1}, {2, 3}, {4, 5}}};
  const auto host_td = exact_treewidth(path_graph(6)).witness;
  const auto td = minor_lift(host_td, m);
  EXPECT_TRUE(valid(td, path_graph(3)));
  EXPECT_LE(td.width(), host_td.width() + 1);
}

TEST(RestrictTd, DropsAndRenumbers) {
  const TreeDecomposition td{{{0, 1, 2}, {2, 3}}, {{0, 1}}};
  const auto r = restrict_td(td, {-1, 0, 1, 2});
  EXPECT_EQ(r.bags[0], (std::vector<int>{0, 1}));
  EXPECT_EQ(r.bags[1], (std::vector<int>{1, 2}));
  const auto s = attach_singletons(r, {3});
  EXPECT_EQ(s.bags.size(), 3u);
  Graph g(4);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  EXPECT_TRUE(valid(s, g));
}

TEST(Outerstring, FixtureOfThree) {
  const auto res = outerstring_decomposition(testsupport::fixture("outerstring3.json"));
  EXPECT_TRUE(valid(res.td, res.graph.graph));
  EXPECT_LE(BigInt(res.width), res.bound);
  EXPECT_EQ(res.bound, BigInt((3 * res.t - 1) * (res.d + 1) - 1));
  EXPECT_GE(res.width, exact_treewidth(res.graph.graph).width);
  EXPECT_LE(res.eccentricity, res.t - 1);
}

TEST(Outerstring, RandomGroundedScenes) {
  for (int trial = 0; trial < 15; ++trial) {
    const auto scene = gen_random_grounded(4 + trial % 6, 1, 70 + static_cast<std::uint64_t>(trial));
    const auto res = outerstring_decomposition(scene);
    EXPECT_TRUE(valid(res.td, res.graph.graph)) << "trial " << trial;
    EXPECT_LE(BigInt(res.width), res.bound);
    if (res.graph.graph.num_vertices() <= 14) EXPECT_GE(res.width, exact_treewidth(res.graph.graph).width);
  }
}

TEST(Outerstring, RejectsUngrounded) {
  EXPECT_THROW(outerstring_decomposition(testsupport::plus_sign()), InputError);
}

TEST(GcOuterstring, SingleDiskDelegates) {
  const auto rep = gc_outerstring_report(testsupport::fixture("outerstring3.json"));
  EXPECT_EQ(rep.c, 1);
  EXPECT_EQ(rep.genus, 0);
  EXPECT_LE(rep.cover_radius, rep.t - 1);
  EXPECT_EQ(rep.bound, BigInt((2 * rep.t - 1) * 1 * 3 * (rep.d + 1) - 1));
  ASSERT_TRUE(rep.constructed.has_value());
  EXPECT_TRUE(verify_td(rep.constructed->td, rep.constructed->graph.graph).valid);
}

TEST(GcOuterstring, TwoDisks) {
  const auto scene = gen_random_grounded(8, 2, 9);
  const auto rep = gc_outerstring_report(scene);
  EXPECT_EQ(rep.c, 2);
  EXPECT_LE(rep.cover_radius, rep.t - 1);
  EXPECT_FALSE(rep.constructed.has_value());
}

TEST(LtwLift, PlusSignAndRandom) {
  auto check = [](const StringScene& scene) {
    const auto arr = compute_arrangement(strip_isolated(scene, compute_arrangement(scene)));
    const auto ig = intersection_graph(arr);
    const auto colouring = default_colouring(ig);
    const auto params = compute_params(arr, colouring);
    const auto cp = coloured_planarisation(planarise(arr), colouring);
    const auto model = build_model(cp, ig, params.d);
    int r = 0;
    for (const auto& [c, rad] : walk_weak_diameter(cp, params.r).radius) r = std::max(r, rad);
    const auto res = ltw_lift(cp, model, r);
    EXPECT_TRUE(valid(res.td, ig.graph));
    EXPECT_TRUE(verify_layering(res.layering, ig.graph));
    EXPECT_LE(res.host_layered_width, 3);
    EXPECT_LE(BigInt(res.layered_width), res.bound);
    EXPECT_EQ(res.bound, BigInt(3 * (4 * r + 1) * (params.d + 1)));
  };
  check(testsupport::plus_sign());
  for (int trial = 0; trial < 10; ++trial) check(gen_random(3 + trial % 5, 2, 40 + static_cast<std::uint64_t>(trial)));
}

TEST(Pace, Format) {
  const TreeDecomposition td{{{0, 1}, {1, 2}}, {{0, 1}}};
  EXPECT_EQ(td_to_pace(td, 3), "s td 2 2 3\nb 1 1 2\nb 2 2 3\n1 2\n");
  const auto j = td_to_json(td, 3);
  EXPECT_EQ(j.at("width"), 1);
}
