#include "strandkit/bounds.hpp"
#include "strandkit/error.hpp"

#include "bound_cases.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace strandkit;

namespace {

std::map<std::string, BigInt> as_big(const std::map<std::string, long>& p) {
  std::map<std::string, BigInt> out;
  for (const auto& [k, v] : p) out[k] = v;
  return out;
}

}  // namespace

TEST(Bounds, FrozenValues) {
  for (const auto& c : testsupport::bound_cases()) {
    EXPECT_EQ(evaluate_bound(c.id, as_big(c.params)).str(), c.expected) << c.id;
  }
}

TEST(Bounds, EveryFormulaHasThreeCases) {
  std::map<std::string, int> seen;
  for (const auto& c : testsupport::bound_cases()) ++seen[c.id];
  for (const auto& f : bound_catalogue()) EXPECT_GE(seen[f.id], 3) << f.id;
}

TEST(Bounds, NamedExamples) {
  EXPECT_EQ(evaluate_bound("outerstring_plane", {{"t", 3}, {"d", 2}}), 23);
  EXPECT_EQ(evaluate_bound("outerstring_maxdeg", {{"Delta", 1}, {"c", 1}, {"g", 0}}), 17);
  EXPECT_EQ(evaluate_bound("localised", {{"Delta", 2}}), 5);
  EXPECT_EQ(evaluate_bound("ss_crossings", {{"m", 3}}), 72);
  EXPECT_EQ(evaluate_bound("ps_maxdeg", {{"Delta", 2}}), 12095);
}

TEST(Bounds, Errors) {
  EXPECT_THROW(evaluate_bound("no_such", {}), InputError);
  EXPECT_THROW(evaluate_bound("localised", {}), InputError);
  EXPECT_THROW(evaluate_bound("localised", {{"Delta", 2}, {"x", 1}}), InputError);
  EXPECT_THROW(evaluate_bound("localised", {{"Delta", -1}}), InputError);
  EXPECT_THROW(evaluate_bound("rtw_main", {{"r", 100000}, {"c", 1}, {"g", 0}}), InputError);
}

TEST(Bounds, CatalogueIdsUnique) {
  std::set<std::string> ids;
  for (const auto& f : bound_catalogue()) EXPECT_TRUE(ids.insert(f.id).second) << f.id;
}

TEST(Binomial, SmallValues) {
  EXPECT_EQ(binomial(8, 3), 56);
  EXPECT_EQ(binomial(3, 5), 0);
  EXPECT_EQ(binomial(10, 0), 1);
}
