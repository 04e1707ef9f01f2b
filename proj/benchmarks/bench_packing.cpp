#include <benchmark/benchmark.h>

#include "hedonic/graph.hpp"
#include "hedonic/packing.hpp"
#include "hedonic/random.hpp"

namespace {

using namespace hedonic;

SimpleGraph sparse_graph(int n, double average_degree, std::uint64_t seed) {
  Rng rng(seed);
  double p = average_degree / n;
  SimpleGraph graph(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (next_chance(rng, p)) graph.add_edge(u, v);
  return graph;
}

void BM_PackingSparse(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  SimpleGraph graph = sparse_graph(n, 2.5, 17);
  for (auto _ : state) {
    Packing packing = max_k2k3_packing(graph);
    benchmark::DoNotOptimize(packing);
  }
}
BENCHMARK(BM_PackingSparse)->DenseRange(20, 40, 5)->Unit(benchmark::kMillisecond);

void BM_PackingFactorQuery(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  SimpleGraph graph = sparse_graph(n, 3.0, 23);
  for (auto _ : state) {
    bool factor = has_k2k3_factor(graph);
    benchmark::DoNotOptimize(factor);
  }
}
BENCHMARK(BM_PackingFactorQuery)->DenseRange(20, 40, 5)->Unit(benchmark::kMillisecond);

}  // namespace
