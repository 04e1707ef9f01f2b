#include "hedonic/matching.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <queue>
#include <unordered_map>

#include "hedonic/errors.hpp"

namespace hedonic {

namespace {

// Textbook blossom algorithm; vertices with alive[v] == false are ignored.
class BlossomSolver {
 public:
  BlossomSolver(const SimpleGraph& graph, const std::vector<bool>& alive)
      : g_(graph), alive_(alive), n_(graph.vertex_count()) {}

  int max_matching() {
    match_.assign(n_, -1);
    for (int v = 0; v < n_; ++v) {
      if (!alive_[v] || match_[v] != -1) continue;
      for (int to : g_.neighbors(v))
        if (alive_[to] && match_[to] == -1) {
          match_[v] = to;
          match_[to] = v;
          break;
        }
    }
    for (int v = 0; v < n_; ++v) {
      if (!alive_[v] || match_[v] != -1) continue;
      int leaf = find_path(v);
      if (leaf == -1) continue;
      while (leaf != -1) {
        int pv = parent_[leaf];
        int next = match_[pv];
        match_[leaf] = pv;
        match_[pv] = leaf;
        leaf = next;
      }
    }
    int pairs = 0;
    for (int v = 0; v < n_; ++v)
      if (alive_[v] && match_[v] > v) ++pairs;
    return pairs;
  }

 private:
  int lca(int a, int b) {
    std::vector<bool> seen(n_, false);
    while (true) {
      a = base_[a];
      seen[a] = true;
      if (match_[a] == -1) break;
      a = parent_[match_[a]];
    }
    while (true) {
      b = base_[b];
      if (seen[b]) return b;
      b = parent_[match_[b]];
    }
  }

  void mark_path(int v, int b, int child) {
    while (base_[v] != b) {
      in_blossom_[base_[v]] = true;
      in_blossom_[base_[match_[v]]] = true;
      parent_[v] = child;
      child = match_[v];
      v = parent_[match_[v]];
    }
  }

  int find_path(int root) {
    used_.assign(n_, false);
    parent_.assign(n_, -1);
    base_.resize(n_);
    for (int i = 0; i < n_; ++i) base_[i] = i;
    used_[root] = true;
    std::queue<int> queue;
    queue.push(root);
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop();
      for (int to : g_.neighbors(v)) {
        if (!alive_[to]) continue;
        if (base_[v] == base_[to] || match_[v] == to) continue;
        if (to == root || (match_[to] != -1 && parent_[match_[to]] != -1)) {
          int cur_base = lca(v, to);
          in_blossom_.assign(n_, false);
          mark_path(v, cur_base, to);
          mark_path(to, cur_base, v);
          for (int i = 0; i < n_; ++i)
            if (in_blossom_[base_[i]]) {
              base_[i] = cur_base;
              if (!used_[i]) {
                used_[i] = true;
                queue.push(i);
              }
            }
        } else if (parent_[to] == -1) {
          parent_[to] = v;
          if (match_[to] == -1) return to;
          used_[match_[to]] = true;
          queue.push(match_[to]);
        }
      }
    }
    return -1;
  }

  const SimpleGraph& g_;
  const std::vector<bool>& alive_;
  int n_;
  std::vector<int> match_, parent_, base_;
  std::vector<bool> used_, in_blossom_;
};

int matching_size(const SimpleGraph& graph, const std::vector<bool>& alive) {
  return BlossomSolver(graph, alive).max_matching();
}

}  // namespace

int max_matching_size(const SimpleGraph& graph) {
  std::vector<bool> alive(graph.vertex_count(), true);
  return matching_size(graph, alive);
}

Matching max_cardinality_matching(const SimpleGraph& graph) {
  int n = graph.vertex_count();
  std::vector<bool> alive(n, true);
  int remaining = matching_size(graph, alive);
  Matching out;
  // Settle positions left to right: position p takes the earliest still
  // unmatched neighbor below it that keeps a maximum matching reachable.
  // This pins the canonically least maximum matching.
  for (int p = 0; p < n; ++p) {
    if (!alive[p]) continue;
    for (int v : graph.neighbors(p)) {
      if (v >= p) break;
      if (!alive[v]) continue;
      alive[p] = alive[v] = false;
      if (matching_size(graph, alive) == remaining - 1) {
        out.edges.emplace_back(v, p);
        --remaining;
        break;
      }
      alive[p] = alive[v] = true;
    }
  }
  std::sort(out.edges.begin(), out.edges.end());
  return out;
}

std::optional<Matching> max_product_perfect_matching(const SimpleGraph& graph,
                                                     const std::vector<Rational>& weights) {
  int n = graph.vertex_count();
  if (n > 24)
    throw DomainError(errc::instance_too_large,
                      "product matching search supports up to 24 vertices, got " +
                          std::to_string(n));
  if (weights.size() != static_cast<size_t>(n) * n)
    throw std::invalid_argument("weight table must be n*n");
  auto weight = [&](int u, int v) -> const Rational& {
    return weights[static_cast<size_t>(std::min(u, v)) * n + std::max(u, v)];
  };
  for (auto [u, v] : graph.edges())
    if (weight(u, v) <= 0)
      throw DomainError(errc::non_positive_weight, "edge weight must be positive on " +
                                                       std::to_string(u) + "," +
                                                       std::to_string(v));
  if (n % 2 != 0) return std::nullopt;

  std::vector<std::uint32_t> adj(n, 0);
  for (auto [u, v] : graph.edges()) {
    adj[u] |= 1u << v;
    adj[v] |= 1u << u;
  }
  std::unordered_map<std::uint32_t, std::optional<Rational>> memo;
  auto best = [&](auto&& self, std::uint32_t mask) -> const std::optional<Rational>& {
    auto it = memo.find(mask);
    if (it != memo.end()) return it->second;
    std::optional<Rational> value;
    if (mask == 0) {
      value = Rational(1);
    } else {
      int v = std::countr_zero(mask);
      std::uint32_t rest = mask & (mask - 1);
      for (std::uint32_t um = adj[v] & rest; um != 0; um &= um - 1) {
        int u = std::countr_zero(um);
        const auto& sub = self(self, rest & ~(1u << u));
        if (!sub) continue;
        Rational cand = weight(v, u) * *sub;
        if (!value || cand > *value) value = std::move(cand);
      }
    }
    return memo.emplace(mask, std::move(value)).first->second;
  };

  std::uint32_t full = n == 32 ? ~0u : (1u << n) - 1;
  if (!best(best, full)) return std::nullopt;

  Matching out;
  std::uint32_t mask = full;
  while (mask != 0) {
    const Rational target = *best(best, mask);
    int v = std::countr_zero(mask);
    std::uint32_t rest = mask & (mask - 1);
    for (std::uint32_t um = adj[v] & rest; um != 0; um &= um - 1) {
      int u = std::countr_zero(um);
      std::uint32_t next = rest & ~(1u << u);
      const auto& sub = best(best, next);
      if (sub && weight(v, u) * *sub == target) {
        out.edges.emplace_back(v, u);
        mask = next;
        break;
      }
    }
  }
  std::sort(out.edges.begin(), out.edges.end());
  return out;
}

}  // namespace hedonic
