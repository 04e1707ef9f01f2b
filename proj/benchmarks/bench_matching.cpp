#include <benchmark/benchmark.h>

#include "hedonic/graph.hpp"
#include "hedonic/matching.hpp"
#include "hedonic/random.hpp"

namespace {

using namespace hedonic;

SimpleGraph random_graph(int n, double p, std::uint64_t seed) {
  Rng rng(seed);
  SimpleGraph graph(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (next_chance(rng, p)) graph.add_edge(u, v);
  return graph;
}

void BM_BlossomMatching(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  SimpleGraph graph = random_graph(n, 4.0 / n, 29);
  for (auto _ : state) {
    Matching matching = max_cardinality_matching(graph);
    benchmark::DoNotOptimize(matching);
  }
}
BENCHMARK(BM_BlossomMatching)->RangeMultiplier(2)->Range(16, 128)->Unit(benchmark::kMillisecond);

void BM_MaxProductPerfectMatching(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  SimpleGraph graph = random_graph(n, 0.6, 31);
  Rng rng(37);
  std::vector<Rational> weights(static_cast<size_t>(n) * n, Rational(0));
  for (auto [u, v] : graph.edges()) {
    Rational w(1 + static_cast<int>(rng() % 5));
    weights[static_cast<size_t>(u) * n + v] = w;
    weights[static_cast<size_t>(v) * n + u] = w;
  }
  for (auto _ : state) {
    auto matching = max_product_perfect_matching(graph, weights);
    benchmark::DoNotOptimize(matching);
  }
}
BENCHMARK(BM_MaxProductPerfectMatching)->DenseRange(12, 20, 2)->Unit(benchmark::kMillisecond);

}  // namespace
