#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "hedonic/graph.hpp"
#include "hedonic/rational.hpp"

namespace hedonic {

struct Matching {
  // Each edge (u, v) with u < v, list sorted ascending.
  std::vector<std::pair<int, int>> edges;
  int size() const { return static_cast<int>(edges.size()); }
};

// Maximum-cardinality matching (blossom based, exact). Among the maximum
// matchings, returns the one whose induced partition into pairs and
// singletons is canonically least.
Matching max_cardinality_matching(const SimpleGraph& graph);

// Perfect matching maximizing the product of edge weights; weights[u*n+v]
// must be positive on every edge (non-positive-weight otherwise). Returns
// nullopt when no perfect matching exists. Exhaustive memoized search,
// intended for small n (rejects n > 24 as instance-too-large). Ties resolve
// to the canonically least matching.
std::optional<Matching> max_product_perfect_matching(const SimpleGraph& graph,
                                                     const std::vector<Rational>& weights);

// Matching size only; blossom algorithm, polynomial.
int max_matching_size(const SimpleGraph& graph);

}  // namespace hedonic
