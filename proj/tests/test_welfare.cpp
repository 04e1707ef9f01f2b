#include "hedonic/welfare.hpp"

#include <gtest/gtest.h>

#include <cmath>

#include "hedonic/errors.hpp"
#include "hedonic/reductions.hpp"
#include "testutil.hpp"

namespace hedonic {
namespace {

TEST(Welfare, TwoTriangleInstanceUtilities) {
  HedonicGame game = testutil::fixture_instance("fig1.json");
  Partition best(6, {{0, 1, 3, 4}, {2, 5}});
  std::vector<Rational> expect{3, 3, 1, 3, 3, 1};
  EXPECT_EQ(utilities(game, best), expect);
  WelfareValue value = nash_welfare(game, best);
  EXPECT_EQ(value.product, 81);
  EXPECT_EQ(value.agent_count, 6);
  EXPECT_NEAR(nash_welfare_display(value), std::pow(3.0, 2.0 / 3.0), 1e-12);

  Partition triangles(6, {{0, 1, 2}, {3, 4, 5}});
  EXPECT_EQ(nash_welfare(game, triangles).product, 64);
  EXPECT_EQ(utilitarian_welfare(game, best), 14);
  EXPECT_EQ(utilitarian_welfare(game, triangles), 12);
}

TEST(Welfare, NashWelfareRequiresIndividualRationality) {
  HedonicGame game = testutil::fixture_instance("fig1.json");
  Partition grand = Partition::grand(6);
  EXPECT_FALSE(is_individually_rational(game, grand));
  try {
    nash_welfare(game, grand);
    FAIL() << "expected DomainError";
  } catch (const DomainError& e) {
    EXPECT_EQ(e.code(), errc::not_individually_rational);
  }
}

TEST(Welfare, CompareIsExactOnProducts) {
  WelfareValue a{Rational(81), 6};
  WelfareValue b{Rational(64), 6};
  EXPECT_EQ(compare_nash_welfare(a, b), std::strong_ordering::greater);
  EXPECT_EQ(compare_nash_welfare(b, a), std::strong_ordering::less);
  EXPECT_EQ(compare_nash_welfare(a, a), std::strong_ordering::equal);
  WelfareValue other{Rational(81), 5};
  EXPECT_THROW(compare_nash_welfare(a, other), DomainError);
}

TEST(Welfare, ApproximationCheckIsExactAtTheBoundary) {
  int n = 6;
  WelfareValue opt{pow_rational(Rational(2), n), n};
  WelfareValue exact_half{Rational(1), n};
  EXPECT_TRUE(check_approximation(exact_half, opt, Rational(2)));
  WelfareValue below{Rational(1, 2), n};
  EXPECT_FALSE(check_approximation(below, opt, Rational(2)));
  EXPECT_TRUE(check_approximation(opt, opt, Rational(1)));
  WelfareValue zero{Rational(0), n};
  EXPECT_TRUE(check_approximation(zero, zero, Rational(1)));
  EXPECT_FALSE(check_approximation(zero, opt, Rational(1000000)));
}

TEST(Welfare, CompareAgreesWithFloatingPoint) {
  Rng rng(99);
  for (int trial = 0; trial < 10000; ++trial) {
    int n = 2 + static_cast<int>(next_below(rng, 7));
    Rational pa(static_cast<long>(next_below(rng, 5000)),
                1 + static_cast<long>(next_below(rng, 50)));
    Rational pb(static_cast<long>(next_below(rng, 5000)),
                1 + static_cast<long>(next_below(rng, 50)));
    WelfareValue a{pa, n};
    WelfareValue b{pb, n};
    double da = nash_welfare_display(a);
    double db = nash_welfare_display(b);
    auto order = compare_nash_welfare(a, b);
    if (std::abs(da - db) > 1e-9) {
      EXPECT_EQ(order == std::strong_ordering::greater, da > db)
          << pa << " vs " << pb << " n=" << n;
    }
  }
}

TEST(Welfare, SymmetricUtilitarianIsTwiceInternalEdgeSum) {
  Rng rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    HedonicGame game = random_game(GameClass::General, 7, 0.6, rng());
    ASSERT_TRUE(game.symmetric());
    Partition p = Partition::from_labels(
        {static_cast<int>(next_below(rng, 3)), static_cast<int>(next_below(rng, 3)),
         static_cast<int>(next_below(rng, 3)), static_cast<int>(next_below(rng, 3)),
         static_cast<int>(next_below(rng, 3)), static_cast<int>(next_below(rng, 3)),
         static_cast<int>(next_below(rng, 3))});
    Rational internal(0);
    for (int i = 0; i < 7; ++i)
      for (int j = i + 1; j < 7; ++j)
        if (p.coalition_index(i) == p.coalition_index(j)) internal += game.valuation(i, j);
    EXPECT_EQ(utilitarian_welfare(game, p), 2 * internal);
  }
}

}  // namespace
}  // namespace hedonic
