#include "hedonic/packing.hpp"

#include <gtest/gtest.h>

#include "hedonic/errors.hpp"
#include "testutil.hpp"

namespace hedonic {
namespace {

SimpleGraph from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  SimpleGraph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

TEST(Packing, TwoTrianglePlusBridgesGraph) {
  HedonicGame game = testutil::fixture_instance("fig1.json");
  Packing packing = max_k2k3_packing(game.mutual_friendship_graph());
  ASSERT_EQ(packing.parts.size(), 2u);
  EXPECT_EQ(packing.parts[0], (std::vector<int>{0, 1, 2}));
  EXPECT_EQ(packing.parts[1], (std::vector<int>{3, 4, 5}));
  EXPECT_EQ(packing.covered(), 6);
  EXPECT_TRUE(packing.is_factor(6));
}

TEST(Packing, StarLeavesLeavesUncovered) {
  SimpleGraph star = from_edges(4, {{0, 1}, {0, 2}, {0, 3}});
  Packing packing = max_k2k3_packing(star);
  ASSERT_EQ(packing.parts.size(), 1u);
  EXPECT_EQ(packing.parts[0], (std::vector<int>{0, 1}));
  EXPECT_EQ(packing.covered(), 2);
  EXPECT_FALSE(packing.is_factor(4));
}

TEST(Packing, PathPrefersTwoEdgesOverOneTriangleChoice) {
  SimpleGraph path = from_edges(4, {{0, 1}, {1, 2}, {2, 3}});
  Packing packing = max_k2k3_packing(path);
  ASSERT_EQ(packing.parts.size(), 2u);
  EXPECT_EQ(packing.parts[0], (std::vector<int>{0, 1}));
  EXPECT_EQ(packing.parts[1], (std::vector<int>{2, 3}));
  EXPECT_TRUE(packing.is_factor(4));
}

TEST(Packing, TrianglePlusPendantTakesTheEdges) {
  SimpleGraph g = from_edges(4, {{0, 1}, {0, 2}, {1, 2}, {2, 3}});
  Packing packing = max_k2k3_packing(g);
  EXPECT_EQ(packing.covered(), 4);
  ASSERT_EQ(packing.parts.size(), 2u);
  EXPECT_EQ(packing.parts[0], (std::vector<int>{0, 1}));
  EXPECT_EQ(packing.parts[1], (std::vector<int>{2, 3}));
}

TEST(Packing, LexLeastAmongMaximumPackings) {
  SimpleGraph c4 = from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
  Packing packing = max_k2k3_packing(c4);
  ASSERT_EQ(packing.parts.size(), 2u);
  EXPECT_EQ(packing.parts[0], (std::vector<int>{0, 1}));
  EXPECT_EQ(packing.parts[1], (std::vector<int>{2, 3}));

  SimpleGraph k4 = from_edges(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  Packing four = max_k2k3_packing(k4);
  ASSERT_EQ(four.parts.size(), 2u);
  EXPECT_EQ(four.parts[0], (std::vector<int>{0, 1}));
  EXPECT_EQ(four.parts[1], (std::vector<int>{2, 3}));

  SimpleGraph k5 = from_edges(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2},
                                  {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});
  Packing five = max_k2k3_packing(k5);
  ASSERT_EQ(five.parts.size(), 2u);
  EXPECT_EQ(five.parts[0], (std::vector<int>{0, 1, 2}));
  EXPECT_EQ(five.parts[1], (std::vector<int>{3, 4}));
}

TEST(Packing, EmptyAndSingleton) {
  Packing empty = max_k2k3_packing(SimpleGraph(0));
  EXPECT_EQ(empty.covered(), 0);
  EXPECT_TRUE(empty.is_factor(0));
  Packing one = max_k2k3_packing(SimpleGraph(1));
  EXPECT_TRUE(one.parts.empty());
  EXPECT_FALSE(one.is_factor(1));
}

TEST(Packing, MatchesReferenceCoverOnRandomGraphs) {
  Rng rng(41);
  for (int trial = 0; trial < 300; ++trial) {
    int n = 2 + static_cast<int>(next_below(rng, 9));
    double p = 0.15 + 0.1 * (trial % 7);
    SimpleGraph g = testutil::random_graph(n, p, rng);
    Packing packing = max_k2k3_packing(g);
    EXPECT_EQ(packing.covered(), testutil::ref_packing_cover(g)) << "n=" << n;
    EXPECT_EQ(has_k2k3_factor(g), packing.covered() == n);
  }
}

TEST(Packing, FactorCharacterizesCoverage) {
  SimpleGraph two_k3 = from_edges(6, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}});
  EXPECT_TRUE(has_k2k3_factor(two_k3));
  SimpleGraph k13 = from_edges(4, {{0, 1}, {0, 2}, {0, 3}});
  EXPECT_FALSE(has_k2k3_factor(k13));
}

}  // namespace
}  // namespace hedonic
