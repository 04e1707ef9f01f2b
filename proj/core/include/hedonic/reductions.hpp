#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hedonic/game.hpp"
#include "hedonic/partition.hpp"
#include "hedonic/welfare.hpp"

namespace hedonic {

// Output of an instance generator: the game, any bounds that are part of the
// encoded question, an optional constructive witness with the welfare it is
// guaranteed to hit, and a provenance note naming the construction and its
// parameters.
struct ReductionOutput {
  HedonicGame game;
  std::optional<int> size_bound;
  std::optional<int> count_bound;
  std::optional<Partition> witness;
  std::optional<WelfareValue> target_welfare;
  std::string provenance;
};

// Symmetric enemy-oriented game from a graph: edges keep value 1, non-edges
// the enemy value. A triangle partition of the graph (if supplied, it is
// validated) becomes a witness with welfare product 2^n. Vertex count must
// be divisible by 3 (bad-vertex-count).
ReductionOutput from_triangle_partition(
    const SimpleGraph& graph,
    const std::optional<std::vector<std::vector<AgentId>>>& triangles = std::nullopt);

// Workers-and-firms market as a hedonic game: workers first, then firms;
// worker-worker value 0, firm-firm value -H with H large enough that no
// individually rational coalition holds two firms. Utilities must be
// non-negative (negative-utility). An optional assignment (firm index per
// worker, -1 for unassigned) becomes the witness partition.
ReductionOutput from_two_sided(int workers, int firms,
                               const std::vector<std::vector<Rational>>& worker_utils,
                               const std::vector<std::vector<Rational>>& firm_utils,
                               const std::optional<std::vector<int>>& assignment = std::nullopt);

// Proper-coloring question as an enemy-oriented game under a coalition count
// bound: the friendship graph is the complement of the input plus k
// pairwise-hostile universal friends. A proper k-coloring (validated, empty
// classes rebalanced when possible) becomes a positive-welfare witness.
ReductionOutput from_k_coloring(const SimpleGraph& graph, int k,
                                const std::optional<std::vector<int>>& coloring = std::nullopt);

// Clique-factor question as a symmetric game under coalition size bound s:
// edges get value alpha (the maximum of the value set), non-edges beta <
// alpha (bad-values otherwise). A K_s-factor witness hits product
// ((s-1)*alpha)^n. The game class is detected: {-n,1} tables become
// enemy-oriented, {-1,n} friend-oriented, anything else restricted.
ReductionOutput from_ks_factor(
    const SimpleGraph& graph, int s, const Rational& alpha, const Rational& beta,
    const std::optional<std::vector<std::vector<AgentId>>>& factor = std::nullopt);

// Seeded instance sampler. Aeg/Afg draw an Erdos-Renyi friendship graph with
// edge probability p (asymmetric mode re-draws each direction); General
// fills each unordered pair with probability p from value_set, both
// directions independently when asymmetric. Default value set
// {-(2n+1), 0, 1, 2}.
HedonicGame random_game(GameClass game_class, int n, double p, std::uint64_t seed,
                        bool symmetric = true,
                        const std::optional<std::vector<Rational>>& value_set = std::nullopt);

}  // namespace hedonic
