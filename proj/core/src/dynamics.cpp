#include "hedonic/dynamics.hpp"

#include "hedonic/errors.hpp"

namespace hedonic {

namespace {

Rational raw_product(const HedonicGame& game, const Partition& partition, bool* rational_out) {
  Rational product(1);
  bool rational = true;
  for (const Rational& u : utilities(game, partition)) {
    if (u < 0) rational = false;
    product *= u;
  }
  if (rational_out) *rational_out = rational;
  return product;
}

// Lowest agent with an admissible move; among its targets the best utility
// gain, first (lowest index) target on ties, fresh singleton considered
// last.
std::optional<Deviation> pick_deviation(const HedonicGame& game, const Partition& partition,
                                        const DeviationKind& kind) {
  std::vector<Deviation> all = enumerate_deviations(game, partition, kind);
  if (all.empty()) return std::nullopt;
  AgentId agent = all.front().agent;
  std::optional<Deviation> best;
  Rational best_gain(0);
  for (const Deviation& d : all) {
    if (d.agent != agent) break;
    Rational current(0);
    for (AgentId j : partition.coalition(d.from))
      if (j != agent) current += game.valuation(agent, j);
    Rational moved(0);
    if (d.to)
      for (AgentId j : partition.coalition(*d.to)) moved += game.valuation(agent, j);
    Rational gain = moved - current;
    if (!best || gain > best_gain) {
      best = d;
      best_gain = gain;
    }
  }
  return best;
}

}  // namespace

DynamicsResult run_dynamics(const HedonicGame& game, const Partition& start,
                            const DeviationKind& kind, long long max_steps) {
  if (game.agent_count() != start.agent_count())
    throw DomainError(errc::mismatched_agent_count, "partition size does not match game");
  long long n = game.agent_count();
  if (max_steps <= 0) max_steps = game.symmetric() ? n * n * n : 1000 * n * n * n;

  DynamicsResult result{start, Rational(0), false, {}, false};
  result.start_product = raw_product(game, start, &result.start_individually_rational);

  Partition current = start;
  for (long long step = 0; step < max_steps; ++step) {
    std::optional<Deviation> next = pick_deviation(game, current, kind);
    if (!next) {
      result.final_partition = current;
      return result;
    }
    current = apply_deviation(current, *next);
    DynamicsStep record{*next, Rational(0), false};
    record.product = raw_product(game, current, &record.individually_rational);
    result.trace.push_back(std::move(record));
  }
  if (pick_deviation(game, current, kind)) result.step_limit_hit = true;
  result.final_partition = current;
  return result;
}

}  // namespace hedonic
