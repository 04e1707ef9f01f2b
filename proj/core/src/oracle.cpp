#include <algorithm>
#include <cstdint>
#include <optional>
#include <vector>

#include "hedonic/errors.hpp"
#include "hedonic/solvers.hpp"

namespace hedonic {

namespace {

// Depth-first enumeration of restricted growth strings with incremental
// utilities. The ascending block choice at every level makes the visit order
// the canonical partition order, so keeping the first strict maximum yields
// the canonically least optimal partition.
template <typename Value>
class Enumerator {
 public:
  Enumerator(const HedonicGame& game, std::vector<Value> table, const OracleOptions& options)
      : game_(game),
        n_(game.agent_count()),
        table_(std::move(table)),
        size_bound_(options.size_bound.value_or(game.agent_count())),
        count_bound_(options.count_bound.value_or(game.agent_count())),
        prune_cliques_(game.game_class() == GameClass::Aeg) {
    labels_.assign(n_, 0);
    utility_.assign(n_, Value(0));
    members_.assign(n_, {});
  }

  std::optional<std::vector<int>> run() {
    descend(0, 0);
    if (!found_) return std::nullopt;
    return best_labels_;
  }

 private:
  bool mutual_friends(int i, int j) const {
    return table_[static_cast<size_t>(i) * n_ + j] > 0 &&
           table_[static_cast<size_t>(j) * n_ + i] > 0;
  }

  void descend(int agent, int used) {
    if (agent == n_) {
      evaluate();
      return;
    }
    int limit = std::min(used + 1, count_bound_);
    for (int block = 0; block < limit; ++block) {
      if (block < used) {
        if (static_cast<int>(members_[block].size()) >= size_bound_) continue;
        if (prune_cliques_) {
          // Enemy-oriented games: a coalition holding any non-mutual pair
          // drags both below zero no matter what else joins, so cut here.
          bool compatible = true;
          for (int j : members_[block])
            if (!mutual_friends(agent, j)) {
              compatible = false;
              break;
            }
          if (!compatible) continue;
        }
      }
      labels_[agent] = block;
      for (int j : members_[block]) {
        utility_[agent] += table_[static_cast<size_t>(agent) * n_ + j];
        utility_[j] += table_[static_cast<size_t>(j) * n_ + agent];
      }
      members_[block].push_back(agent);
      descend(agent + 1, std::max(used, block + 1));
      members_[block].pop_back();
      for (int j : members_[block]) {
        utility_[agent] -= table_[static_cast<size_t>(agent) * n_ + j];
        utility_[j] -= table_[static_cast<size_t>(j) * n_ + agent];
      }
    }
  }

  void evaluate() {
    Value product(1);
    for (int i = 0; i < n_; ++i) {
      if (utility_[i] < 0) return;
      product *= utility_[i];
    }
    if (!found_ || product > best_product_) {
      found_ = true;
      best_product_ = product;
      best_labels_ = labels_;
    }
  }

  const HedonicGame& game_;
  int n_;
  std::vector<Value> table_;
  int size_bound_;
  int count_bound_;
  bool prune_cliques_;
  std::vector<int> labels_;
  std::vector<Value> utility_;
  std::vector<std::vector<int>> members_;
  bool found_ = false;
  Value best_product_{0};
  std::vector<int> best_labels_;
};

}  // namespace

std::optional<SolveResult> brute_force_optimal(const HedonicGame& game,
                                               const OracleOptions& options) {
  int n = game.agent_count();
  if (n > options.ceiling)
    throw DomainError(errc::instance_too_large,
                      "exhaustive search refuses " + std::to_string(n) + " agents (ceiling " +
                          std::to_string(options.ceiling) + ")");
  if (options.size_bound && *options.size_bound < 1)
    throw std::invalid_argument("size bound must be positive");
  if (options.count_bound && *options.count_bound < 1)
    throw std::invalid_argument("count bound must be positive");

  bool integral = true;
  BigInt max_abs(0);
  for (const Rational& v : game.valuations()) {
    if (boost::multiprecision::denominator(v) != 1) {
      integral = false;
      break;
    }
    BigInt mag = boost::multiprecision::abs(boost::multiprecision::numerator(v));
    if (mag > max_abs) max_abs = mag;
  }
  bool fits = false;
  if (integral) {
    BigInt bound = boost::multiprecision::pow(max_abs * (n - 1), static_cast<unsigned>(n));
    fits = bound < (BigInt(1) << 62);
  }

  std::optional<std::vector<int>> labels;
  if (fits) {
    std::vector<std::int64_t> table;
    table.reserve(static_cast<size_t>(n) * n);
    for (const Rational& v : game.valuations())
      table.push_back(boost::multiprecision::numerator(v).convert_to<std::int64_t>());
    labels = Enumerator<std::int64_t>(game, std::move(table), options).run();
  } else {
    labels = Enumerator<Rational>(game, game.valuations(), options).run();
  }
  if (!labels) return std::nullopt;

  Partition partition = Partition::from_labels(*labels);
  return SolveResult{partition, nash_welfare(game, partition), SolveMethod::BruteForce,
                     Rational(1), false};
}

}  // namespace hedonic
