#include "hedonic/game.hpp"

#include <algorithm>
#include <stdexcept>

#include "hedonic/errors.hpp"

namespace hedonic {

HedonicGame::HedonicGame(int n, std::vector<Rational> valuations, GameClass game_class,
                         bool symmetric, std::vector<Rational> value_set)
    : n_(n),
      valuations_(std::move(valuations)),
      game_class_(game_class),
      symmetric_(symmetric),
      value_set_(std::move(value_set)) {
  if (n < 1) throw std::invalid_argument("agent count must be positive");
  if (valuations_.size() != static_cast<size_t>(n) * n)
    throw std::invalid_argument("valuation table must be n*n");
  for (int i = 0; i < n; ++i) {
    if (valuation(i, i) != 0) throw std::invalid_argument("self valuation must be zero");
  }
  if (symmetric_) {
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (valuation(i, j) != valuation(j, i))
          throw DomainError(errc::not_symmetric, "valuation table is not symmetric");
  }
  auto check_values = [&](const std::vector<Rational>& allowed, const char* what) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (i == j) continue;
        if (std::find(allowed.begin(), allowed.end(), valuation(i, j)) == allowed.end())
          throw DomainError(errc::invalid_class, std::string("valuation outside ") + what +
                                                     " value set at pair " + std::to_string(i) +
                                                     "," + std::to_string(j));
      }
  };
  switch (game_class_) {
    case GameClass::General:
      break;
    case GameClass::Aeg:
      check_values({Rational(-n), Rational(1)}, "enemy-oriented");
      break;
    case GameClass::Afg:
      check_values({Rational(-1), Rational(n)}, "friend-oriented");
      break;
    case GameClass::Restricted:
      if (value_set_.empty())
        throw std::invalid_argument("restricted class needs a value set");
      check_values(value_set_, "restricted");
      break;
  }
}

namespace {
HedonicGame friends_enemies_game(const SimpleGraph& friendships, const Rational& friend_value,
                                 const Rational& enemy_value, GameClass cls) {
  int n = friendships.vertex_count();
  std::vector<Rational> table(static_cast<size_t>(n) * n, Rational(0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      table[static_cast<size_t>(i) * n + j] = friendships.has_edge(i, j) ? friend_value : enemy_value;
    }
  return HedonicGame(n, std::move(table), cls, true);
}
}  // namespace

HedonicGame HedonicGame::aeg_from_graph(const SimpleGraph& friendships) {
  int n = friendships.vertex_count();
  return friends_enemies_game(friendships, Rational(1), Rational(-n), GameClass::Aeg);
}

HedonicGame HedonicGame::afg_from_graph(const SimpleGraph& friendships) {
  int n = friendships.vertex_count();
  return friends_enemies_game(friendships, Rational(n), Rational(-1), GameClass::Afg);
}

Rational HedonicGame::friend_value() const {
  switch (game_class_) {
    case GameClass::Aeg:
      return Rational(1);
    case GameClass::Afg:
      return Rational(n_);
    default:
      throw DomainError(errc::unsupported_game_class, "friend value defined for aeg/afg only");
  }
}

Rational HedonicGame::enemy_value() const {
  switch (game_class_) {
    case GameClass::Aeg:
      return Rational(-n_);
    case GameClass::Afg:
      return Rational(-1);
    default:
      throw DomainError(errc::unsupported_game_class, "enemy value defined for aeg/afg only");
  }
}

SimpleGraph HedonicGame::mutual_friendship_graph() const {
  if (game_class_ != GameClass::Aeg && game_class_ != GameClass::Afg)
    throw DomainError(errc::unsupported_game_class,
                      "mutual friendship graph defined for aeg/afg only");
  Rational fv = friend_value();
  SimpleGraph graph(n_);
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j)
      if (valuation(i, j) == fv && valuation(j, i) == fv) graph.add_edge(i, j);
  return graph;
}

}  // namespace hedonic
