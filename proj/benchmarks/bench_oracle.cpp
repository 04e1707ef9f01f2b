#include <benchmark/benchmark.h>

#include "hedonic/reductions.hpp"
#include "hedonic/solvers.hpp"

namespace {

using namespace hedonic;

void BM_OracleAeg(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  HedonicGame game = random_game(GameClass::Aeg, n, 0.4, 7);
  for (auto _ : state) {
    auto result = brute_force_optimal(game);
    benchmark::DoNotOptimize(result);
  }
}
BENCHMARK(BM_OracleAeg)->DenseRange(8, 12)->Unit(benchmark::kMillisecond);

void BM_OracleGeneral(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  HedonicGame game = random_game(GameClass::General, n, 0.6, 11);
  for (auto _ : state) {
    auto result = brute_force_optimal(game);
    benchmark::DoNotOptimize(result);
  }
}
BENCHMARK(BM_OracleGeneral)->DenseRange(8, 12)->Unit(benchmark::kMillisecond);

void BM_OracleSizeBounded(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  HedonicGame game = random_game(GameClass::Aeg, n, 0.4, 13);
  OracleOptions options;
  options.size_bound = 3;
  for (auto _ : state) {
    auto result = brute_force_optimal(game, options);
    benchmark::DoNotOptimize(result);
  }
}
BENCHMARK(BM_OracleSizeBounded)->DenseRange(8, 12)->Unit(benchmark::kMillisecond);

}  // namespace
