#pragma once

#include <optional>
#include <vector>

#include "hedonic/stability.hpp"

namespace hedonic {

struct DynamicsStep {
  Deviation deviation;
  // Product of all utilities after the step, taken raw: negative factors are
  // kept as-is so non-rational intermediate states remain observable.
  Rational product;
  bool individually_rational = false;
};

struct DynamicsResult {
  Partition final_partition;
  Rational start_product;
  bool start_individually_rational = false;
  std::vector<DynamicsStep> trace;
  bool step_limit_hit = false;
};

// Repeatedly applies the deterministic first deviation: lowest agent with an
// admissible move, best utility gain among its targets, ties to the lowest
// target index with the fresh singleton last. max_steps 0 picks a default
// cap (n^3 for symmetric games, 1000 * n^3 otherwise). Hitting the cap is
// reported in the result, not thrown.
DynamicsResult run_dynamics(const HedonicGame& game, const Partition& start,
                            const DeviationKind& kind, long long max_steps = 0);

}  // namespace hedonic
