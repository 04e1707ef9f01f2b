#pragma once

#include <optional>
#include <vector>

#include "hedonic/game.hpp"
#include "hedonic/partition.hpp"
#include "hedonic/welfare.hpp"

namespace hedonic {

enum class DeviationType { Nash, Individual, ContractualNash, ContractualIndividual };

struct DeviationKind {
  DeviationType type = DeviationType::Nash;
  // Forbids leaving a coalition of exactly two agents.
  bool non_abandoning = false;
};

// A single-agent move; target empty means splitting off into a fresh
// singleton. Coalition indices refer to the canonical order of the partition
// the deviation applies to.
struct Deviation {
  AgentId agent = -1;
  int from = -1;
  std::optional<int> to;  // nullopt = new singleton

  bool operator==(const Deviation& other) const = default;
};

// All admissible deviations in canonical order: agents ascending, existing
// target coalitions by index ascending, the fresh singleton last.
std::vector<Deviation> enumerate_deviations(const HedonicGame& game, const Partition& partition,
                                            const DeviationKind& kind);

// First admissible deviation in that order, if any.
std::optional<Deviation> find_deviation(const HedonicGame& game, const Partition& partition,
                                        const DeviationKind& kind);

enum class StabilityNotion { NashStable, IndividuallyStable, ContractuallyNashStable, ContractuallyIndividuallyStable };

bool is_stable(const HedonicGame& game, const Partition& partition, StabilityNotion notion);

// Witness for instability: the first admissible deviation, nullopt when
// stable.
std::optional<Deviation> stability_witness(const HedonicGame& game, const Partition& partition,
                                           StabilityNotion notion);

DeviationKind deviation_kind_for(StabilityNotion notion);

// Throws DomainError(invalid-deviation) when the move is not well formed for
// this partition (bad indices, agent not in the source, or a no-op).
Partition apply_deviation(const Partition& partition, const Deviation& deviation);

// Symmetric games: a partition where every agent has strictly positive
// utility is contractually Nash stable; verifies and returns the stability
// check. Throws DomainError(not-symmetric) on asymmetric input.
bool verify_cns_from_positive_utilities(const HedonicGame& game, const Partition& partition);

}  // namespace hedonic
