#include "testutil.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <stdexcept>

namespace testutil {

hedonic::Json fixture_json(const std::string& name) {
  std::string path = std::string(HEDONIC_FIXTURE_DIR) + "/" + name;
  std::ifstream in(path);
  if (!in) throw std::runtime_error("missing fixture " + path);
  return hedonic::Json::parse(in);
}

hedonic::HedonicGame fixture_instance(const std::string& name) {
  return hedonic::parse_instance(fixture_json(name));
}

using hedonic::HedonicGame;
using hedonic::Rational;
using hedonic::Rng;
using hedonic::SimpleGraph;

namespace {

int packing_search(const SimpleGraph& graph, std::uint64_t used, int from) {
  int n = graph.vertex_count();
  int v = from;
  while (v < n && (used >> v & 1)) ++v;
  if (v == n) return 0;
  int best = packing_search(graph, used | (std::uint64_t(1) << v), v + 1);
  for (int a = v + 1; a < n; ++a) {
    if ((used >> a & 1) || !graph.has_edge(v, a)) continue;
    best = std::max(best,
                    2 + packing_search(graph, used | (std::uint64_t(1) << v) |
                                                  (std::uint64_t(1) << a), v + 1));
    for (int b = a + 1; b < n; ++b) {
      if ((used >> b & 1) || !graph.has_edge(v, b) || !graph.has_edge(a, b)) continue;
      best = std::max(best, 3 + packing_search(graph,
                                               used | (std::uint64_t(1) << v) |
                                                   (std::uint64_t(1) << a) |
                                                   (std::uint64_t(1) << b),
                                               v + 1));
    }
  }
  return best;
}

int matching_search(int n, const std::vector<std::vector<int>>& adj, std::uint64_t used, int v) {
  while (v < n && (used >> v & 1)) ++v;
  if (v >= n) return 0;
  int best = matching_search(n, adj, used | (std::uint64_t(1) << v), v + 1);
  for (int w : adj[v])
    if (w > v && !(used >> w & 1))
      best = std::max(best, 1 + matching_search(n, adj,
                                                used | (std::uint64_t(1) << v) |
                                                    (std::uint64_t(1) << w),
                                                v + 1));
  return best;
}

}  // namespace

int ref_packing_cover(const SimpleGraph& graph) {
  if (graph.vertex_count() > 20) throw std::invalid_argument("reference packing is exponential");
  return packing_search(graph, 0, 0);
}

int ref_matching_size(int n, const std::vector<std::pair<int, int>>& edges) {
  if (n > 20) throw std::invalid_argument("reference matching is exponential");
  std::vector<std::vector<int>> adj(n);
  for (auto [u, v] : edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  return matching_search(n, adj, 0, 0);
}

std::optional<Rational> ref_max_product_pm(
    int n, const std::function<Rational(int, int)>& weight) {
  if (n % 2 != 0) return std::nullopt;
  if (n > 12) throw std::invalid_argument("reference perfect matching is exponential");
  std::optional<Rational> best;
  std::function<void(std::uint64_t, const Rational&)> go = [&](std::uint64_t used,
                                                               const Rational& acc) {
    int v = 0;
    while (v < n && (used >> v & 1)) ++v;
    if (v == n) {
      if (!best || acc > *best) best = acc;
      return;
    }
    for (int w = v + 1; w < n; ++w) {
      if (used >> w & 1) continue;
      Rational value = weight(v, w);
      if (value <= 0) continue;
      go(used | (std::uint64_t(1) << v) | (std::uint64_t(1) << w), acc * value);
    }
  };
  go(0, Rational(1));
  return best;
}

void for_each_partition(int n, const std::function<void(const std::vector<int>&)>& visit) {
  std::vector<int> labels(n, 0);
  std::function<void(int, int)> go = [&](int i, int blocks) {
    if (i == n) {
      visit(labels);
      return;
    }
    for (int b = 0; b <= blocks; ++b) {
      labels[i] = b;
      go(i + 1, std::max(blocks, b + 1));
    }
  };
  if (n > 0) go(0, 0);
}

std::vector<Rational> ref_utilities(const HedonicGame& game, const std::vector<int>& labels) {
  int n = game.agent_count();
  std::vector<Rational> utilities(n, Rational(0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && labels[i] == labels[j]) utilities[i] += game.valuation(i, j);
  return utilities;
}

std::optional<RefBest> ref_best_product(const HedonicGame& game, int size_bound,
                                        int count_bound) {
  int n = game.agent_count();
  std::optional<RefBest> best;
  for_each_partition(n, [&](const std::vector<int>& labels) {
    int blocks = 0;
    for (int label : labels) blocks = std::max(blocks, label + 1);
    if (count_bound > 0 && blocks > count_bound) return;
    if (size_bound > 0) {
      std::vector<int> sizes(blocks, 0);
      for (int label : labels) ++sizes[label];
      for (int size : sizes)
        if (size > size_bound) return;
    }
    std::vector<Rational> utilities = ref_utilities(game, labels);
    Rational product(1);
    for (const Rational& u : utilities) {
      if (u < 0) return;
      product *= u;
    }
    if (!best || product > best->product) best = RefBest{product, labels};
  });
  return best;
}

SimpleGraph random_graph(int n, double p, Rng& rng) {
  SimpleGraph graph(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (hedonic::next_chance(rng, p)) graph.add_edge(u, v);
  return graph;
}

}  // namespace testutil
