#pragma once

#include <compare>

#include "hedonic/game.hpp"
#include "hedonic/partition.hpp"

namespace hedonic {

// Nash welfare of an individually rational partition, carried exactly as the
// product of the n utilities together with n. The n-th root is never
// materialized; comparisons and ratio checks go through the product.
struct WelfareValue {
  Rational product;
  int agent_count = 0;
};

Rational utility(const HedonicGame& game, const Partition& partition, AgentId agent);
std::vector<Rational> utilities(const HedonicGame& game, const Partition& partition);

// All utilities >= 0.
bool is_individually_rational(const HedonicGame& game, const Partition& partition);

// Throws DomainError(not-individually-rational) when some utility is negative.
WelfareValue nash_welfare(const HedonicGame& game, const Partition& partition);

// Throws DomainError(mismatched-agent-count) when the agent counts differ.
std::strong_ordering compare_nash_welfare(const WelfareValue& a, const WelfareValue& b);

// alpha-approximation test: alpha^n * alg.product >= opt.product, exactly.
bool check_approximation(const WelfareValue& alg, const WelfareValue& opt, const Rational& alpha);

Rational utilitarian_welfare(const HedonicGame& game, const Partition& partition);

// Geometric mean as a double, for display only.
double nash_welfare_display(const WelfareValue& value);

}  // namespace hedonic
