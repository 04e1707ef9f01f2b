#include "hedonic/stability.hpp"

#include <stdexcept>

#include "hedonic/errors.hpp"

namespace hedonic {

namespace {

// Checks one concrete move against the deviation predicate without building
// the successor partition: the mover must strictly gain, an individual move
// additionally needs every target member to tolerate the mover, a
// contractual move needs every left-behind member to be glad to see it go.
bool admissible(const HedonicGame& game, const Partition& partition, const DeviationKind& kind,
                AgentId agent, const std::optional<int>& target) {
  int from = partition.coalition_index(agent);
  const auto& source = partition.coalition(from);
  if (kind.non_abandoning && source.size() == 2) return false;

  Rational current(0);
  for (AgentId j : source)
    if (j != agent) current += game.valuation(agent, j);

  Rational moved(0);
  if (target) {
    for (AgentId j : partition.coalition(*target)) moved += game.valuation(agent, j);
  }
  if (moved <= current) return false;

  bool needs_target_consent = kind.type == DeviationType::Individual ||
                              kind.type == DeviationType::ContractualIndividual;
  bool needs_source_consent = kind.type == DeviationType::ContractualNash ||
                              kind.type == DeviationType::ContractualIndividual;
  if (needs_target_consent && target) {
    for (AgentId j : partition.coalition(*target))
      if (game.valuation(j, agent) < 0) return false;
  }
  if (needs_source_consent) {
    for (AgentId j : source)
      if (j != agent && game.valuation(j, agent) > 0) return false;
  }
  return true;
}

}  // namespace

std::vector<Deviation> enumerate_deviations(const HedonicGame& game, const Partition& partition,
                                            const DeviationKind& kind) {
  if (game.agent_count() != partition.agent_count())
    throw DomainError(errc::mismatched_agent_count, "partition size does not match game");
  std::vector<Deviation> out;
  for (AgentId agent = 0; agent < game.agent_count(); ++agent) {
    int from = partition.coalition_index(agent);
    for (int target = 0; target < partition.coalition_count(); ++target) {
      if (target == from) continue;
      if (admissible(game, partition, kind, agent, target))
        out.push_back({agent, from, target});
    }
    if (partition.coalition(from).size() >= 2 &&
        admissible(game, partition, kind, agent, std::nullopt))
      out.push_back({agent, from, std::nullopt});
  }
  return out;
}

std::optional<Deviation> find_deviation(const HedonicGame& game, const Partition& partition,
                                        const DeviationKind& kind) {
  if (game.agent_count() != partition.agent_count())
    throw DomainError(errc::mismatched_agent_count, "partition size does not match game");
  for (AgentId agent = 0; agent < game.agent_count(); ++agent) {
    int from = partition.coalition_index(agent);
    for (int target = 0; target < partition.coalition_count(); ++target) {
      if (target == from) continue;
      if (admissible(game, partition, kind, agent, target))
        return Deviation{agent, from, target};
    }
    if (partition.coalition(from).size() >= 2 &&
        admissible(game, partition, kind, agent, std::nullopt))
      return Deviation{agent, from, std::nullopt};
  }
  return std::nullopt;
}

DeviationKind deviation_kind_for(StabilityNotion notion) {
  switch (notion) {
    case StabilityNotion::NashStable:
      return {DeviationType::Nash, false};
    case StabilityNotion::IndividuallyStable:
      return {DeviationType::Individual, false};
    case StabilityNotion::ContractuallyNashStable:
      return {DeviationType::ContractualNash, false};
    case StabilityNotion::ContractuallyIndividuallyStable:
      return {DeviationType::ContractualIndividual, false};
  }
  throw std::logic_error("unreachable");
}

bool is_stable(const HedonicGame& game, const Partition& partition, StabilityNotion notion) {
  return !find_deviation(game, partition, deviation_kind_for(notion)).has_value();
}

std::optional<Deviation> stability_witness(const HedonicGame& game, const Partition& partition,
                                           StabilityNotion notion) {
  return find_deviation(game, partition, deviation_kind_for(notion));
}

Partition apply_deviation(const Partition& partition, const Deviation& deviation) {
  int n = partition.agent_count();
  if (deviation.agent < 0 || deviation.agent >= n)
    throw DomainError(errc::invalid_deviation, "agent out of range");
  if (deviation.from != partition.coalition_index(deviation.agent))
    throw DomainError(errc::invalid_deviation, "agent is not in the stated source coalition");
  if (deviation.to) {
    if (*deviation.to < 0 || *deviation.to >= partition.coalition_count())
      throw DomainError(errc::invalid_deviation, "target coalition out of range");
    if (*deviation.to == deviation.from)
      throw DomainError(errc::invalid_deviation, "target equals source");
  } else if (partition.coalition(deviation.from).size() == 1) {
    throw DomainError(errc::invalid_deviation, "agent is already a singleton");
  }

  std::vector<std::vector<AgentId>> next;
  for (int c = 0; c < partition.coalition_count(); ++c) {
    std::vector<AgentId> members;
    for (AgentId j : partition.coalition(c))
      if (j != deviation.agent) members.push_back(j);
    if (deviation.to && c == *deviation.to) members.push_back(deviation.agent);
    if (!members.empty()) next.push_back(std::move(members));
  }
  if (!deviation.to) next.push_back({deviation.agent});
  return Partition(n, std::move(next));
}

bool verify_cns_from_positive_utilities(const HedonicGame& game, const Partition& partition) {
  if (!game.symmetric())
    throw DomainError(errc::not_symmetric,
                      "positive-utility stability argument needs a symmetric game");
  bool all_positive = true;
  for (const Rational& u : utilities(game, partition))
    if (u <= 0) {
      all_positive = false;
      break;
    }
  bool stable = is_stable(game, partition, StabilityNotion::ContractuallyNashStable);
  if (all_positive && !stable)
    throw std::logic_error(
        "symmetric game with all-positive utilities must be contractually Nash stable");
  return stable;
}

}  // namespace hedonic
