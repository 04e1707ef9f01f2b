#include "hedonic/packing.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <unordered_map>

#include "hedonic/errors.hpp"

namespace hedonic {

namespace {

// Exact maximum {K2, K3}-packing of one component via memoized search over
// vertex masks. Reconstruction walks choices in canonical order (cover the
// lowest vertex with its smallest partner, triangle before pair for the same
// partner, leave uncovered last), so the first choice consistent with the
// optimum yields the canonically least packing.
struct ComponentPacker {
  std::vector<int> verts;
  std::vector<std::uint64_t> adj;
  std::unordered_map<std::uint64_t, int> memo;

  int best(std::uint64_t mask) {
    if (mask == 0) return 0;
    auto it = memo.find(mask);
    if (it != memo.end()) return it->second;
    int cap = std::popcount(mask);
    int v = std::countr_zero(mask);
    std::uint64_t rest = mask & (mask - 1);
    int best_val = 0;
    for (std::uint64_t am = adj[v] & rest; am != 0 && best_val < cap; am &= am - 1) {
      int a = std::countr_zero(am);
      std::uint64_t pair_rest = rest & ~(1ull << a);
      std::uint64_t bm = adj[v] & adj[a] & pair_rest & ~((2ull << a) - 1);
      for (; bm != 0 && best_val < cap; bm &= bm - 1) {
        int b = std::countr_zero(bm);
        best_val = std::max(best_val, 3 + best(pair_rest & ~(1ull << b)));
      }
      if (best_val < cap) best_val = std::max(best_val, 2 + best(pair_rest));
    }
    if (best_val < cap) best_val = std::max(best_val, best(rest));
    memo.emplace(mask, best_val);
    return best_val;
  }

  void reconstruct(std::uint64_t mask, std::vector<std::vector<int>>& out) {
    while (mask != 0) {
      int target = best(mask);
      int v = std::countr_zero(mask);
      std::uint64_t rest = mask & (mask - 1);
      bool covered = false;
      for (std::uint64_t am = adj[v] & rest; am != 0 && !covered; am &= am - 1) {
        int a = std::countr_zero(am);
        std::uint64_t pair_rest = rest & ~(1ull << a);
        std::uint64_t bm = adj[v] & adj[a] & pair_rest & ~((2ull << a) - 1);
        for (; bm != 0; bm &= bm - 1) {
          int b = std::countr_zero(bm);
          std::uint64_t next = pair_rest & ~(1ull << b);
          if (3 + best(next) == target) {
            out.push_back({verts[v], verts[a], verts[b]});
            mask = next;
            covered = true;
            break;
          }
        }
        if (!covered && 2 + best(pair_rest) == target) {
          out.push_back({verts[v], verts[a]});
          mask = pair_rest;
          covered = true;
        }
      }
      if (!covered) mask = rest;
    }
  }
};

}  // namespace

Packing max_k2k3_packing(const SimpleGraph& graph) {
  Packing packing;
  for (const auto& component : graph.connected_components()) {
    if (component.size() > 64)
      throw DomainError(errc::instance_too_large,
                        "packing search supports components up to 64 vertices, got " +
                            std::to_string(component.size()));
    ComponentPacker packer;
    packer.verts = component;
    int m = static_cast<int>(component.size());
    packer.adj.assign(m, 0);
    for (int a = 0; a < m; ++a)
      for (int b = a + 1; b < m; ++b)
        if (graph.has_edge(component[a], component[b])) {
          packer.adj[a] |= 1ull << b;
          packer.adj[b] |= 1ull << a;
        }
    std::uint64_t full = m == 64 ? ~0ull : (1ull << m) - 1;
    packer.reconstruct(full, packing.parts);
  }
  std::sort(packing.parts.begin(), packing.parts.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return packing;
}

bool has_k2k3_factor(const SimpleGraph& graph) {
  return max_k2k3_packing(graph).is_factor(graph.vertex_count());
}

}  // namespace hedonic
