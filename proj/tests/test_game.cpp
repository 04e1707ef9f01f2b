#include "hedonic/game.hpp"

#include <gtest/gtest.h>

#include "hedonic/errors.hpp"

namespace hedonic {
namespace {

std::vector<Rational> table4(std::initializer_list<int> values) {
  std::vector<Rational> out;
  for (int v : values) out.emplace_back(v);
  return out;
}

TEST(Game, RejectsNonZeroDiagonal) {
  auto values = table4({1, 0, 0, 0});
  EXPECT_THROW(HedonicGame(2, values, GameClass::General, false), std::invalid_argument);
}

TEST(Game, RejectsWrongTableSize) {
  EXPECT_THROW(HedonicGame(2, table4({0, 1, 1, 0, 0}), GameClass::General, false),
               std::invalid_argument);
}

TEST(Game, SymmetricFlagIsChecked) {
  auto values = table4({0, 1, 2, 0});
  try {
    HedonicGame(2, values, GameClass::General, true);
    FAIL() << "expected DomainError";
  } catch (const DomainError& e) {
    EXPECT_EQ(e.code(), errc::not_symmetric);
  }
}

TEST(Game, ClassValueSetsAreChecked) {
  auto ok = table4({0, 1, -2, 0});
  EXPECT_NO_THROW(HedonicGame(2, ok, GameClass::Aeg, false));
  auto bad = table4({0, 2, 1, 0});
  try {
    HedonicGame(2, bad, GameClass::Aeg, false);
    FAIL() << "expected DomainError";
  } catch (const DomainError& e) {
    EXPECT_EQ(e.code(), errc::invalid_class);
  }
  auto afg = table4({0, 2, -1, 0});
  EXPECT_NO_THROW(HedonicGame(2, afg, GameClass::Afg, false));
  EXPECT_THROW(HedonicGame(2, table4({0, 1, -1, 0}), GameClass::Afg, false), DomainError);
}

TEST(Game, RestrictedClassUsesCallerValueSet) {
  auto values = table4({0, 3, -5, 0});
  EXPECT_NO_THROW(
      HedonicGame(2, values, GameClass::Restricted, false, {Rational(3), Rational(-5)}));
  EXPECT_THROW(HedonicGame(2, values, GameClass::Restricted, false, {Rational(3)}), DomainError);
}

TEST(Game, FriendAndEnemyValues) {
  SimpleGraph g(3);
  g.add_edge(0, 1);
  HedonicGame aeg = HedonicGame::aeg_from_graph(g);
  EXPECT_EQ(aeg.friend_value(), 1);
  EXPECT_EQ(aeg.enemy_value(), -3);
  EXPECT_EQ(aeg.valuation(0, 1), 1);
  EXPECT_EQ(aeg.valuation(0, 2), -3);
  HedonicGame afg = HedonicGame::afg_from_graph(g);
  EXPECT_EQ(afg.friend_value(), 3);
  EXPECT_EQ(afg.enemy_value(), -1);
  HedonicGame general(2, table4({0, 1, 1, 0}), GameClass::General, true);
  EXPECT_THROW(general.friend_value(), DomainError);
}

TEST(Game, MutualFriendshipDropsOneWayEdges) {
  int n = 3;
  std::vector<Rational> values(9, Rational(0));
  auto at = [&](int i, int j) -> Rational& { return values[i * n + j]; };
  at(0, 1) = 1;
  at(1, 0) = 1;
  at(0, 2) = 1;
  at(2, 0) = -3;
  at(1, 2) = -3;
  at(2, 1) = -3;
  HedonicGame game(n, values, GameClass::Aeg, false);
  SimpleGraph gm = game.mutual_friendship_graph();
  EXPECT_TRUE(gm.has_edge(0, 1));
  EXPECT_FALSE(gm.has_edge(0, 2));
  EXPECT_FALSE(gm.has_edge(1, 2));
  HedonicGame general(2, table4({0, 1, 1, 0}), GameClass::General, true);
  try {
    general.mutual_friendship_graph();
    FAIL() << "expected DomainError";
  } catch (const DomainError& e) {
    EXPECT_EQ(e.code(), errc::unsupported_game_class);
  }
}

}  // namespace
}  // namespace hedonic
