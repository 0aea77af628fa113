#include <gtest/gtest.h>

#include "../support/fixtures.hpp"
#include "behaviocog/biometric/selection.hpp"
#include "behaviocog/errors.hpp"

namespace behaviocog {
namespace {

TEST(SelectionTest, Grid) {
  const auto g = z_grid();
  ASSERT_EQ(g.size(), 81u);
  EXPECT_EQ(g.front(), 0.0);
  EXPECT_EQ(g[1], 0.125);
  EXPECT_EQ(g.back(), 10.0);
}

TEST(SelectionTest, ZListMonotone) {
  Rng rng(1);
  const auto pair = testing::planted_pair(rng);
  for (Feature f : testing::planted_candidates()) {
    const std::vector<Feature> subset{f};
    const auto zl = get_z_list(subset, pair);
    ASSERT_EQ(zl.size(), 81u);
    for (std::size_t i = 1; i < zl.size(); ++i) {
      EXPECT_GE(zl[i].tpr, zl[i - 1].tpr);
      EXPECT_GE(zl[i].fpr, zl[i - 1].fpr);
    }
    for (const auto& e : zl) {
      EXPECT_GE(e.tpr, 0.0);
      EXPECT_LE(e.fpr, 1.0);
    }
  }
  const std::vector<Feature> x{Feature::x};
  const auto zl = get_z_list(x, pair);
  EXPECT_EQ(zl.back().tpr, 1.0);
  EXPECT_EQ(zl.back().fpr, 0.0);
}

TEST(SelectionTest, ZListErrors) {
  Rng rng(1);
  auto pair = testing::planted_pair(rng);
  pair.user_tests.clear();
  const std::vector<Feature> x{Feature::x};
  EXPECT_THROW(get_z_list(x, pair), ConfigError);
}

TEST(SelectionTest, PlantedFeatureFirst) {
  int hits = 0;
  for (int seed = 0; seed < 5; ++seed) {
    Rng rng(static_cast<std::uint64_t>(seed));
    const std::vector<UserAttackerPair> pairs{testing::planted_pair(rng), testing::planted_pair(rng)};
    const auto sel = select_features(testing::planted_candidates(), pairs);
    ASSERT_FALSE(sel.steps.empty());
    hits += sel.steps.front().subset == std::vector<Feature>{Feature::x};
    EXPECT_EQ(sel.tpr_sum, 2.0);
  }
  EXPECT_GE(hits, 4);
}

TEST(SelectionTest, SingleFeatureAndDuplicatedPairs) {
  Rng rng(9);
  const auto pair = testing::planted_pair(rng);
  const std::vector<Feature> only{Feature::dy};
  const std::vector<UserAttackerPair> one{pair};
  const auto sel = select_features(only, one);
  EXPECT_EQ(sel.subset, only);

  const auto a = select_features(testing::planted_candidates(), one);
  const std::vector<UserAttackerPair> twice{pair, pair};
  const auto b = select_features(testing::planted_candidates(), twice);
  EXPECT_EQ(a.subset, b.subset);
  EXPECT_EQ(a.z, b.z);
  EXPECT_DOUBLE_EQ(2 * a.fpr_sum, b.fpr_sum);

  EXPECT_THROW(select_features(std::vector<Feature>{}, one), ConfigError);
  EXPECT_EQ(to_json(a)["subset"].size(), a.subset.size());
}

}  // namespace
}  // namespace behaviocog
