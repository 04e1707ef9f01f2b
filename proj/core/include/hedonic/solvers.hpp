#pragma once

#include <optional>
#include <string>

#include "hedonic/game.hpp"
#include "hedonic/packing.hpp"
#include "hedonic/partition.hpp"
#include "hedonic/welfare.hpp"

namespace hedonic {

enum class SolveMethod {
  AegPackingApprox,
  AfgAlgorithm1,
  ExactTwoCoalitions,
  ExactSizeTwo,
  AegSizeBoundedApprox,
  BruteForce,
};

std::string solve_method_name(SolveMethod method);

struct SolveResult {
  Partition partition;
  WelfareValue welfare;
  SolveMethod method;
  // Multiplicative approximation factor the method promises; the exact
  // methods report 1.
  Rational guarantee;
  // Set by exact_two_coalitions when the optimum needs a singleton side and
  // therefore has zero welfare; the result is optimal but degenerate.
  bool degenerate = false;
};

// Enemy-oriented games: the packing factor of the mutual friendship graph
// when one exists, otherwise all singletons. Guarantee n-1.
SolveResult aeg_packing_approx(const HedonicGame& game);

// Diagnostics from the friend-oriented two-phase algorithm, mainly for
// structural test assertions.
struct Alg1Stats {
  bool early_singletons = false;
  int deviations = 0;
  std::vector<Rational> utilitarian_trace;  // welfare before phase 2, then after each deviation
  std::vector<AgentId> movable;             // the set U, ascending
};

// Symmetric friend-oriented games: pack, widen the movable set, then run
// non-abandoning improvement moves to quiescence. Guarantee 2n.
SolveResult afg_algorithm1(const HedonicGame& game, Alg1Stats* stats = nullptr);

// Enemy-oriented games, at most two coalitions, exact. Nullopt when no
// individually rational split into at most two coalitions exists.
std::optional<SolveResult> exact_two_coalitions(const HedonicGame& game);

// Any game, coalitions of size at most two, exact.
SolveResult exact_size_two(const HedonicGame& game);

// Enemy-oriented games, coalition size bounded by s >= 3: the packing factor
// when one exists (guarantee s-1), otherwise all singletons.
SolveResult aeg_size_bounded_approx(const HedonicGame& game, int size_bound);

struct OracleOptions {
  std::optional<int> size_bound;
  std::optional<int> count_bound;
  // Enumeration refuses n beyond this; the tool layer lets the environment
  // override it (COALITION_ORACLE_CEILING).
  int ceiling = 12;
};

// Exhaustive optimum over individually rational partitions, enumerating
// restricted growth strings. Nullopt when the bounds leave no individually
// rational partition (possible only under a count bound). Ties resolve to
// the canonically least partition. Throws instance-too-large beyond the
// ceiling.
std::optional<SolveResult> brute_force_optimal(const HedonicGame& game,
                                               const OracleOptions& options = {});

inline constexpr int kDefaultOracleCeiling = 12;

}  // namespace hedonic
