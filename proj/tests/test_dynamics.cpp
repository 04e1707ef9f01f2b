#include "hedonic/dynamics.hpp"

#include <gtest/gtest.h>

#include "hedonic/reductions.hpp"
#include "testutil.hpp"

namespace hedonic {
namespace {

SimpleGraph complete(int n) {
  SimpleGraph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

TEST(Dynamics, PendantTriangleSingleStep) {
  HedonicGame game = testutil::fixture_instance("fig3.json");
  Partition start(4, {{0, 2}, {1, 3}});
  DeviationKind kind{DeviationType::Individual, false};
  DynamicsResult result = run_dynamics(game, start, kind);
  EXPECT_EQ(result.start_product, 1);
  EXPECT_TRUE(result.start_individually_rational);
  ASSERT_EQ(result.trace.size(), 1u);
  EXPECT_EQ(result.trace[0].deviation, (Deviation{1, 1, 0}));
  EXPECT_EQ(result.trace[0].product, 0);
  EXPECT_TRUE(result.trace[0].individually_rational);
  EXPECT_EQ(result.final_partition, Partition(4, {{0, 1, 2}, {3}}));
  EXPECT_FALSE(result.step_limit_hit);
}

TEST(Dynamics, AllPairsOnCompleteFriendshipIsNonAbandoningFixpoint) {
  HedonicGame game = HedonicGame::aeg_from_graph(complete(6));
  Partition pairs(6, {{0, 1}, {2, 3}, {4, 5}});
  DeviationKind kind{DeviationType::Individual, true};
  DynamicsResult result = run_dynamics(game, pairs, kind);
  EXPECT_TRUE(result.trace.empty());
  EXPECT_EQ(result.final_partition, pairs);
  EXPECT_FALSE(result.step_limit_hit);
}

TEST(Dynamics, SingletonsSeedAGenuineMerge) {
  HedonicGame game = HedonicGame::aeg_from_graph(complete(6));
  Partition start(6, {{0, 1}, {2, 3}, {4}, {5}});
  DeviationKind kind{DeviationType::Individual, true};
  DynamicsResult result = run_dynamics(game, start, kind);
  ASSERT_EQ(result.trace.size(), 2u);
  EXPECT_EQ(result.trace[0].deviation, (Deviation{4, 2, 0}));
  EXPECT_EQ(result.trace[0].product, 0);
  EXPECT_EQ(result.trace[1].deviation, (Deviation{5, 2, 0}));
  EXPECT_EQ(result.trace[1].product, 81);
  EXPECT_EQ(result.final_partition, Partition(6, {{0, 1, 4, 5}, {2, 3}}));
  EXPECT_FALSE(result.step_limit_hit);
}

TEST(Dynamics, StepLimitIsReportedNotThrown) {
  HedonicGame game = HedonicGame::aeg_from_graph(complete(6));
  Partition start(6, {{0, 1}, {2, 3}, {4}, {5}});
  DeviationKind kind{DeviationType::Individual, true};
  DynamicsResult result = run_dynamics(game, start, kind, 1);
  EXPECT_TRUE(result.step_limit_hit);
  EXPECT_EQ(result.trace.size(), 1u);
}

TEST(Dynamics, MergeTraceReachesPositiveProduct) {
  int n = 3;
  std::vector<Rational> values(9, Rational(0));
  auto set = [&](int i, int j, int value) {
    values[i * n + j] = value;
    values[j * n + i] = value;
  };
  set(0, 1, 3);
  set(0, 2, -1);
  set(1, 2, 2);
  HedonicGame game(n, values, GameClass::General, true);
  DynamicsResult result =
      run_dynamics(game, Partition::singletons(3), DeviationKind{DeviationType::Nash, false});
  ASSERT_EQ(result.trace.size(), 2u);
  EXPECT_EQ(result.trace[0].deviation, (Deviation{0, 0, 1}));
  EXPECT_EQ(result.trace[0].product, 0);
  EXPECT_EQ(result.trace[1].deviation, (Deviation{2, 1, 0}));
  EXPECT_EQ(result.trace[1].product, 10);
  EXPECT_EQ(result.final_partition, Partition::grand(3));
  EXPECT_FALSE(find_deviation(game, result.final_partition,
                              DeviationKind{DeviationType::Nash, false})
                   .has_value());
}

TEST(Dynamics, AsymmetricNashCanCycleAndKeepsRawNegativeProducts) {
  int n = 3;
  std::vector<Rational> values(9, Rational(0));
  auto at = [&](int i, int j) -> Rational& { return values[i * n + j]; };
  at(0, 1) = 3;
  at(1, 0) = 3;
  at(1, 2) = -5;
  at(2, 1) = 4;
  HedonicGame game(n, values, GameClass::General, false);
  DynamicsResult result = run_dynamics(game, Partition::singletons(3),
                                       DeviationKind{DeviationType::Nash, false}, 50);
  EXPECT_TRUE(result.step_limit_hit);
  bool saw_negative = false;
  for (const DynamicsStep& step : result.trace) {
    if (step.product < 0) {
      saw_negative = true;
      EXPECT_FALSE(step.individually_rational);
    }
  }
  EXPECT_TRUE(saw_negative);
}

TEST(Dynamics, ContractualIndividualConvergesOnRandomSymmetricGames) {
  Rng rng(515);
  DeviationKind kind{DeviationType::ContractualIndividual, false};
  for (int trial = 0; trial < 60; ++trial) {
    int n = 3 + static_cast<int>(next_below(rng, 4));
    HedonicGame game = random_game(GameClass::General, n, 0.5, rng());
    std::vector<int> labels(n);
    for (int i = 0; i < n; ++i) labels[i] = static_cast<int>(next_below(rng, 3));
    DynamicsResult result = run_dynamics(game, Partition::from_labels(labels), kind);
    EXPECT_FALSE(result.step_limit_hit) << "trial=" << trial;
    EXPECT_FALSE(find_deviation(game, result.final_partition, kind).has_value());
  }
}

TEST(Dynamics, DefaultCapSymmetricIsCubic) {
  HedonicGame game = HedonicGame::aeg_from_graph(complete(4));
  DynamicsResult result = run_dynamics(game, Partition::singletons(4),
                                       DeviationKind{DeviationType::Nash, false});
  EXPECT_LE(result.trace.size(), 64u);
  EXPECT_FALSE(result.step_limit_hit);
  EXPECT_EQ(result.final_partition, Partition::grand(4));
}

}  // namespace
}  // namespace hedonic
