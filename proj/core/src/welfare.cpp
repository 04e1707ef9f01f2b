#include "hedonic/welfare.hpp"

#include "hedonic/errors.hpp"

namespace hedonic {

Rational utility(const HedonicGame& game, const Partition& partition, AgentId agent) {
  Rational sum(0);
  for (AgentId other : partition.coalition(partition.coalition_index(agent)))
    if (other != agent) sum += game.valuation(agent, other);
  return sum;
}

std::vector<Rational> utilities(const HedonicGame& game, const Partition& partition) {
  int n = game.agent_count();
  if (partition.agent_count() != n)
    throw DomainError(errc::mismatched_agent_count, "partition size does not match game");
  std::vector<Rational> out(n, Rational(0));
  for (const auto& coalition : partition.coalitions())
    for (AgentId i : coalition)
      for (AgentId j : coalition)
        if (i != j) out[i] += game.valuation(i, j);
  return out;
}

bool is_individually_rational(const HedonicGame& game, const Partition& partition) {
  for (const Rational& u : utilities(game, partition))
    if (u < 0) return false;
  return true;
}

WelfareValue nash_welfare(const HedonicGame& game, const Partition& partition) {
  WelfareValue value;
  value.agent_count = game.agent_count();
  value.product = Rational(1);
  for (const Rational& u : utilities(game, partition)) {
    if (u < 0)
      throw DomainError(errc::not_individually_rational,
                        "nash welfare undefined: some agent has negative utility");
    value.product *= u;
  }
  return value;
}

std::strong_ordering compare_nash_welfare(const WelfareValue& a, const WelfareValue& b) {
  if (a.agent_count != b.agent_count)
    throw DomainError(errc::mismatched_agent_count,
                      "nash welfare values for different agent counts are incomparable");
  if (a.product < b.product) return std::strong_ordering::less;
  if (a.product > b.product) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

bool check_approximation(const WelfareValue& alg, const WelfareValue& opt, const Rational& alpha) {
  if (alg.agent_count != opt.agent_count)
    throw DomainError(errc::mismatched_agent_count,
                      "nash welfare values for different agent counts are incomparable");
  return pow_rational(alpha, static_cast<unsigned>(alg.agent_count)) * alg.product >= opt.product;
}

Rational utilitarian_welfare(const HedonicGame& game, const Partition& partition) {
  Rational sum(0);
  for (const Rational& u : utilities(game, partition)) sum += u;
  return sum;
}

double nash_welfare_display(const WelfareValue& value) {
  return nth_root_double(value.product, value.agent_count);
}

}  // namespace hedonic
