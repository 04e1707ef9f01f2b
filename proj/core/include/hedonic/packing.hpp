#pragma once

#include <vector>

#include "hedonic/graph.hpp"

namespace hedonic {

// Vertex-disjoint packing into edges (K2) and triangles (K3).
struct Packing {
  std::vector<std::vector<int>> parts;

  int covered() const {
    int c = 0;
    for (const auto& p : parts) c += static_cast<int>(p.size());
    return c;
  }
  bool is_factor(int n) const { return covered() == n; }
};

// Maximum-coverage {K2, K3}-packing, exact. Among maximum packings, returns
// the one whose partition (parts plus uncovered singletons) is canonically
// least. Exact search runs per connected component with memoized masks;
// components beyond 64 vertices are rejected (instance-too-large).
Packing max_k2k3_packing(const SimpleGraph& graph);

bool has_k2k3_factor(const SimpleGraph& graph);

}  // namespace hedonic
