#include "strandkit/arrangement.hpp"
#include "strandkit/colouring.hpp"
#include "strandkit/error.hpp"
#include "strandkit/families.hpp"
#include "strandkit/planarise.hpp"
#include "strandkit/product_model.hpp"

#include "support.hpp"

#include <gtest/gtest.h>

#include <numeric>

using namespace strandkit;

namespace {

// Union-find over the host; each branch set must be one class of its own
// induced subgraph, sets pairwise disjoint, and every edge of g realised.
bool oracle_model_ok(const MinorModel& m, const Graph& g) {
  const int n = m.host.num_vertices();
  std::vector<int> owner(static_cast<std::size_t>(n), -1);
  for (std::size_t b = 0; b < m.branch_sets.size(); ++b) {
    if (m.branch_sets[b].empty()) return false;
    for (int x : m.branch_sets[b]) {
      if (owner[static_cast<std::size_t>(x)] >= 0) return false;
      owner[static_cast<std::size_t>(x)] = static_cast<int>(b);
    }
  }
  std::vector<int> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    return x;
  };
  std::set<std::pair<int, int>> realised;
  for (auto [u, v] : m.host.edges()) {
    const int a = owner[static_cast<std::size_t>(u)];
    const int b = owner[static_cast<std::size_t>(v)];
    if (a < 0 || b < 0) continue;
    if (a == b) parent[static_cast<std::size_t>(find(u))] = find(v);
    else realised.insert({std::min(a, b), std::max(a, b)});
  }
  for (const auto& set : m.branch_sets) {
    for (int x : set) {
      if (find(x) != find(set[0])) return false;
    }
  }
  for (auto e : g.edges()) {
    if (!realised.contains(e)) return false;
  }
  return true;
}

struct Pipeline {
  Arrangement arr;
  IntersectionGraph ig;
  OrderedColouring colouring;
  ColouringParams params;
  Planarisation p;
  ColouredPlanarisation cp;
};

Pipeline run(const StringScene& scene, std::optional<OrderedColouring> colouring = std::nullopt) {
  Pipeline s;
  const StringScene kept = strip_isolated(scene, compute_arrangement(scene));
  s.arr = compute_arrangement(kept);
  s.ig = intersection_graph(s.arr);
  s.colouring = colouring ? *colouring : default_colouring(s.ig);
  s.params = compute_params(s.arr, s.colouring);
  s.p = planarise(s.arr);
  s.cp = coloured_planarisation(s.p, s.colouring);
  return s;
}

OrderedColouring declared(const StringScene& s) {
  OrderedColouring c;
  c.phi = s.colours;
  for (const auto& [k, v] : c.phi) c.t = std::max(c.t, v);
  return c;
}

}  // namespace

TEST(VerifyModel, AcceptsPathContraction) {
  // P4 contracted to K2
  const MinorModel m{path_graph(4), {{0, 1}, {2, 3}}};
  EXPECT_TRUE(verify_model(m, complete_graph(2)).valid);
}

TEST(VerifyModel, NamesEachClause) {
  const Graph k2 = complete_graph(2);
  EXPECT_EQ(verify_model({path_graph(3), {{0}, {}}}, k2).violated_clause, "non-empty");
  EXPECT_EQ(verify_model({path_graph(3), {{0, 1}, {1, 2}}}, k2).violated_clause, "disjoint");
  EXPECT_EQ(verify_model({path_graph(4), {{0, 2}, {3}}}, k2).violated_clause, "connected");
  EXPECT_EQ(verify_model({path_graph(4), {{0}, {3}}}, k2).violated_clause, "edge");
}

TEST(VerifyModel, AgreesWithOracleOnRandomSets) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const Graph host = grid_graph(3, 3);
    Graph g(3);
    for (int u = 0; u < 3; ++u)
      for (int v = u + 1; v < 3; ++v)
        if (rng() % 2) g.add_edge(u, v);
    MinorModel m{host, std::vector<std::vector<int>>(3)};
    for (int x = 0; x < 9; ++x) {
      const int b = static_cast<int>(rng() % 4);
      if (b < 3) m.branch_sets[static_cast<std::size_t>(b)].push_back(x);
    }
    EXPECT_EQ(verify_model(m, g).valid, oracle_model_ok(m, g)) << "trial " << trial;
  }
}

TEST(BuildModel, PlusSign) {
  const auto s = run(testsupport::plus_sign());
  const auto model = build_model(s.cp, s.ig, s.params.d);
  ASSERT_EQ(model.mu.size(), 2u);
  // both curves sit on the single crossing, in different copies
  EXPECT_EQ(model.mu[0].size(), 1u);
  EXPECT_EQ(model.mu[1].size(), 1u);
  EXPECT_EQ(model.mu[0][0].host, model.mu[1][0].host);
  EXPECT_NE(model.mu[0][0].copy, model.mu[1][0].copy);
  EXPECT_TRUE(verify_model(model.flatten(), s.ig.graph).valid);
  EXPECT_NO_THROW(check_projection(model, s.cp));
}

TEST(BuildModel, FigureOne) {
  const auto scene = testsupport::fixture("fig1.json");
  const auto s = run(scene, declared(scene));
  const auto model = build_model(s.cp, s.ig, s.params.d);
  const auto flat = model.flatten();
  EXPECT_TRUE(verify_model(flat, s.ig.graph).valid);
  EXPECT_TRUE(oracle_model_ok(flat, s.ig.graph));
  EXPECT_NO_THROW(check_projection(model, s.cp));
  EXPECT_EQ(flat.host.num_vertices(), host_graph(s.cp).num_vertices() * (s.params.d + 1));
}

TEST(BuildModel, UnderstatedDegeneracy) {
  // d = 0 allows one walk per vertex; the plus-sign crossing carries two
  const auto s = run(testsupport::plus_sign());
  try {
    build_model(s.cp, s.ig, 0);
    FAIL() << "expected understated d";
  } catch (const CheckFailure& e) {
    EXPECT_NE(std::string(e.what()).find("parameter d understated"), std::string::npos);
  }
}

TEST(BuildModel, RandomScenesWithPermutedColourings) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const auto scene = gen_random(2 + trial % 7, 1 + trial % 3, 1000 + static_cast<std::uint64_t>(trial));
    const auto arr = compute_arrangement(strip_isolated(scene, compute_arrangement(scene)));
    if (arr.curves.empty()) continue;
    const auto ig = intersection_graph(arr);
    auto base = default_colouring(ig);
    std::vector<int> perm(static_cast<std::size_t>(base.t));
    std::iota(perm.begin(), perm.end(), 1);
    std::shuffle(perm.begin(), perm.end(), rng);
    for (const auto& colouring : std::vector<OrderedColouring>{base, relabel(base, perm)}) {
      const auto s = run(scene, colouring);
      const auto model = build_model(s.cp, s.ig, s.params.d);
      EXPECT_TRUE(oracle_model_ok(model.flatten(), s.ig.graph)) << "trial " << trial;
      EXPECT_TRUE(verify_model(model.flatten(), s.ig.graph).valid);
      EXPECT_NO_THROW(check_projection(model, s.cp));
      const auto dist = walk_weak_diameter(s.cp, s.params.r);
      EXPECT_LE(BigInt(dist.max_diameter), s.params.r);
      // removing E_C can only lengthen paths
      for (const auto& [c, diam] : dist.diameter) EXPECT_LE(diam, dist.diameter_host.at(c));
    }
  }
}

TEST(WalkDistances, TightBoundThrows) {
  const auto scene = testsupport::fixture("fig1.json");
  const auto s = run(scene, declared(scene));
  const auto dist = walk_weak_diameter(s.cp, s.params.r);
  if (dist.max_diameter == 0) GTEST_SKIP();
  EXPECT_THROW(walk_weak_diameter(s.cp, BigInt(dist.max_diameter - 1)), CheckFailure);
}

TEST(GroundedDistance, OuterstringFixture) {
  const auto scene = testsupport::fixture("outerstring3.json");
  const auto s = run(scene);
  std::vector<std::pair<CurveId, CurveEnd>> Y{{0, CurveEnd::Start}, {1, CurveEnd::Start}, {2, CurveEnd::Start}};
  const int worst = grounded_distance_check(s.p, s.cp, Y);
  EXPECT_LE(worst, s.colouring.t - 1);
  Y.pop_back();
  EXPECT_THROW(grounded_distance_check(s.p, s.cp, Y), InputError);
}

TEST(ModelJson, KeysAreCurveIds) {
  const auto s = run(testsupport::plus_sign());
  const auto j = model_to_json(build_model(s.cp, s.ig, s.params.d));
  EXPECT_TRUE(j.contains("0"));
  EXPECT_TRUE(j.contains("1"));
}
