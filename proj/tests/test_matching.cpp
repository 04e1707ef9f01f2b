#include "hedonic/matching.hpp"

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

TEST(Matching, PetersenGraphHasPerfectMatching) {
  std::vector<std::pair<int, int>> edges{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4},
                                         {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9},
                                         {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5}};
  SimpleGraph petersen = from_edges(10, edges);
  EXPECT_EQ(max_matching_size(petersen), 5);
  Matching m = max_cardinality_matching(petersen);
  EXPECT_EQ(m.size(), 5);
}

TEST(Matching, BlossomContractionCase) {
  SimpleGraph g = from_edges(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}});
  EXPECT_EQ(max_matching_size(g), 2);
  Matching m = max_cardinality_matching(g);
  std::vector<std::pair<int, int>> expect{{0, 2}, {1, 3}};
  EXPECT_EQ(m.edges, expect);
}

TEST(Matching, TwoTrianglesJoined) {
  SimpleGraph g = from_edges(6, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}, {2, 3}});
  EXPECT_EQ(max_matching_size(g), 3);
}

TEST(Matching, LexLeastAmongMaximumMatchings) {
  SimpleGraph c4 = from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
  Matching m = max_cardinality_matching(c4);
  std::vector<std::pair<int, int>> expect{{0, 1}, {2, 3}};
  EXPECT_EQ(m.edges, expect);

  SimpleGraph path = from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}});
  Matching pm = max_cardinality_matching(path);
  std::vector<std::pair<int, int>> path_expect{{0, 1}, {2, 3}};
  EXPECT_EQ(pm.edges, path_expect);

  SimpleGraph star = from_edges(4, {{0, 1}, {0, 2}, {0, 3}});
  Matching sm = max_cardinality_matching(star);
  std::vector<std::pair<int, int>> star_expect{{0, 1}};
  EXPECT_EQ(sm.edges, star_expect);
}

TEST(Matching, SizeMatchesReferenceOnRandomGraphs) {
  Rng rng(17);
  for (int trial = 0; trial < 300; ++trial) {
    int n = 2 + static_cast<int>(next_below(rng, 11));
    double p = 0.1 + 0.1 * (trial % 8);
    SimpleGraph g = testutil::random_graph(n, p, rng);
    int expect = testutil::ref_matching_size(n, g.edges());
    EXPECT_EQ(max_matching_size(g), expect);
    Matching m = max_cardinality_matching(g);
    EXPECT_EQ(m.size(), expect);
    std::vector<bool> used(n, false);
    for (auto [u, v] : m.edges) {
      EXPECT_TRUE(g.has_edge(u, v));
      EXPECT_FALSE(used[u] || used[v]);
      used[u] = used[v] = true;
    }
  }
}

TEST(Matching, MaxProductSelectsHeavyPairs) {
  SimpleGraph c4 = from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
  std::vector<Rational> weights(16, Rational(0));
  auto set = [&](int u, int v, int value) {
    weights[u * 4 + v] = value;
    weights[v * 4 + u] = value;
  };
  set(0, 1, 1);
  set(1, 2, 4);
  set(2, 3, 1);
  set(0, 3, 4);
  auto m = max_product_perfect_matching(c4, weights);
  ASSERT_TRUE(m.has_value());
  std::vector<std::pair<int, int>> expect{{0, 3}, {1, 2}};
  EXPECT_EQ(m->edges, expect);
}

TEST(Matching, MaxProductTiesGoLexLeast) {
  SimpleGraph c4 = from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
  std::vector<Rational> weights(16, Rational(2));
  auto m = max_product_perfect_matching(c4, weights);
  ASSERT_TRUE(m.has_value());
  std::vector<std::pair<int, int>> expect{{0, 1}, {2, 3}};
  EXPECT_EQ(m->edges, expect);
}

TEST(Matching, MaxProductEdgeCases) {
  SimpleGraph odd(3);
  odd.add_edge(0, 1);
  std::vector<Rational> w3(9, Rational(1));
  EXPECT_FALSE(max_product_perfect_matching(odd, w3).has_value());

  SimpleGraph no_pm = from_edges(4, {{0, 1}, {0, 2}, {0, 3}});
  std::vector<Rational> w4(16, Rational(1));
  EXPECT_FALSE(max_product_perfect_matching(no_pm, w4).has_value());

  SimpleGraph pair = from_edges(2, {{0, 1}});
  std::vector<Rational> zero(4, Rational(0));
  try {
    max_product_perfect_matching(pair, zero);
    FAIL() << "expected DomainError";
  } catch (const DomainError& e) {
    EXPECT_EQ(e.code(), errc::non_positive_weight);
  }

  SimpleGraph big(26);
  std::vector<Rational> wbig(26 * 26, Rational(1));
  try {
    max_product_perfect_matching(big, wbig);
    FAIL() << "expected DomainError";
  } catch (const DomainError& e) {
    EXPECT_EQ(e.code(), errc::instance_too_large);
  }
}

TEST(Matching, MaxProductMatchesReference) {
  Rng rng(23);
  for (int trial = 0; trial < 120; ++trial) {
    int n = 2 + 2 * static_cast<int>(next_below(rng, 4));
    SimpleGraph g = testutil::random_graph(n, 0.6, rng);
    std::vector<Rational> weights(static_cast<size_t>(n) * n, Rational(0));
    for (auto [u, v] : g.edges()) {
      Rational w(1 + static_cast<long>(next_below(rng, 6)),
                 1 + static_cast<long>(next_below(rng, 3)));
      weights[u * n + v] = w;
      weights[v * n + u] = w;
    }
    auto got = max_product_perfect_matching(g, weights);
    auto expect = testutil::ref_max_product_pm(n, [&](int u, int v) {
      return g.has_edge(u, v) ? weights[u * n + v] : Rational(0);
    });
    ASSERT_EQ(got.has_value(), expect.has_value()) << "n=" << n;
    if (got) {
      Rational product(1);
      for (auto [u, v] : got->edges) product *= weights[u * n + v];
      EXPECT_EQ(product, *expect);
    }
  }
}

}  // namespace
}  // namespace hedonic
