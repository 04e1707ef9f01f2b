#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hedonic/graph.hpp"
#include "hedonic/rational.hpp"

namespace hedonic {

using AgentId = std::int32_t;

enum class GameClass { General, Aeg, Afg, Restricted };

// Additively separable hedonic game: n agents, a directed valuation v(i, j)
// for every ordered pair, and an agent's utility in a coalition equal to the
// sum of its valuations of the other members.
//
// The class tag is declared at construction and validated eagerly:
//   Aeg        every off-diagonal value in {-n, 1}
//   Afg        every off-diagonal value in {-1, n}
//   Restricted every off-diagonal value in a caller-supplied finite set
// Likewise the symmetric flag is checked against the table, not trusted.
class HedonicGame {
 public:
  HedonicGame(int n, std::vector<Rational> valuations, GameClass game_class,
              bool symmetric, std::vector<Rational> value_set = {});

  // Symmetric friends-and-enemies games from a friendship graph: edges get
  // the class's friend value, non-edges the enemy value.
  static HedonicGame aeg_from_graph(const SimpleGraph& friendships);
  static HedonicGame afg_from_graph(const SimpleGraph& friendships);

  int agent_count() const { return n_; }
  GameClass game_class() const { return game_class_; }
  bool symmetric() const { return symmetric_; }
  const std::vector<Rational>& value_set() const { return value_set_; }

  const Rational& valuation(AgentId from, AgentId to) const {
    return valuations_[static_cast<size_t>(from) * n_ + to];
  }
  const std::vector<Rational>& valuations() const { return valuations_; }

  // Class positive/negative values; meaningful for Aeg and Afg only.
  Rational friend_value() const;
  Rational enemy_value() const;

  // Edge (i, j) iff v(i, j) and v(j, i) both equal the friend value.
  // Throws DomainError(unsupported-game-class) unless Aeg or Afg.
  SimpleGraph mutual_friendship_graph() const;

 private:
  int n_;
  std::vector<Rational> valuations_;
  GameClass game_class_;
  bool symmetric_;
  std::vector<Rational> value_set_;
};

}  // namespace hedonic
