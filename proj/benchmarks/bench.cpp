#include <benchmark/benchmark.h>

#include "realfill/fibration.hpp"

using namespace realfill;

namespace {

const Mat2 kF(-39, 25, -25, 16);

void BM_CuttingCycle(benchmark::State& state) {
  // Powers of [f] give longer cycles with the same period.
  const Mat2 m = kF.pow(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(cutting_cycle(m));
}
BENCHMARK(BM_CuttingCycle)->Arg(1)->Arg(4)->Arg(16);

void BM_RealnessBySearch(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(realness_by_search(kF, state.range(0)));
}
BENCHMARK(BM_RealnessBySearch)->Arg(50)->Arg(200);

// Worst case for the search: nothing to find.
void BM_RealnessBySearchMiss(benchmark::State& state) {
  const Mat2 m(12, 5, 7, 3);
  for (auto _ : state) benchmark::DoNotOptimize(realness_by_search(m, state.range(0)));
}
BENCHMARK(BM_RealnessBySearchMiss)->Arg(50)->Arg(200)->Unit(benchmark::kMillisecond);

void BM_HurwitzClassesTwo(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(hurwitz_classes_two(kF, state.range(0)));
}
BENCHMARK(BM_HurwitzClassesTwo)->Arg(40)->Arg(200)->Unit(benchmark::kMillisecond);

void BM_Sl2zWord(benchmark::State& state) {
  const Mat2 m = kF.pow(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sl2z_word(m));
}
BENCHMARK(BM_Sl2zWord)->Arg(1)->Arg(8)->Arg(32);

void BM_RealFillingVerdict(benchmark::State& state) {
  const OpenBookMonodromy ob(kF, 2);
  for (auto _ : state) benchmark::DoNotOptimize(real_filling_verdict(ob, 200));
}
BENCHMARK(BM_RealFillingVerdict)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
