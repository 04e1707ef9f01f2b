#include <benchmark/benchmark.h>

#include "hedonic/reductions.hpp"
#include "hedonic/solvers.hpp"

namespace {

using namespace hedonic;

void BM_AegPackingApprox(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  HedonicGame game = random_game(GameClass::Aeg, n, 3.0 / n, 41);
  for (auto _ : state) {
    SolveResult result = aeg_packing_approx(game);
    benchmark::DoNotOptimize(result);
  }
}
BENCHMARK(BM_AegPackingApprox)->DenseRange(20, 40, 5)->Unit(benchmark::kMillisecond);

void BM_AfgAlgorithm1(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  HedonicGame game = random_game(GameClass::Afg, n, 3.0 / n, 43);
  for (auto _ : state) {
    SolveResult result = afg_algorithm1(game);
    benchmark::DoNotOptimize(result);
  }
}
BENCHMARK(BM_AfgAlgorithm1)->DenseRange(20, 40, 5)->Unit(benchmark::kMillisecond);

void BM_ExactTwoCoalitions(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  HedonicGame game = random_game(GameClass::Aeg, n, 0.7, 47);
  for (auto _ : state) {
    auto result = exact_two_coalitions(game);
    benchmark::DoNotOptimize(result);
  }
}
BENCHMARK(BM_ExactTwoCoalitions)->RangeMultiplier(2)->Range(16, 64)->Unit(benchmark::kMillisecond);

void BM_ExactSizeTwo(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  HedonicGame game = random_game(GameClass::General, n, 0.5, 53);
  for (auto _ : state) {
    SolveResult result = exact_size_two(game);
    benchmark::DoNotOptimize(result);
  }
}
BENCHMARK(BM_ExactSizeTwo)->DenseRange(12, 20, 2)->Unit(benchmark::kMillisecond);

}  // namespace
