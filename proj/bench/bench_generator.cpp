// Serial walk vs. OpenMP kernel for the plane-partition parts histogram.
#include <benchmark/benchmark.h>

#include "planepart/plane_generator.hpp"

namespace {

void BM_CountSerial(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(planepart::count_by_parts_serial(n));
}

void BM_CountParallel(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int jobs = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(planepart::count_by_parts_parallel(n, jobs));
}

}  // namespace

BENCHMARK(BM_CountSerial)->Arg(15)->Arg(20)->Arg(25)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CountParallel)
    ->ArgsProduct({{15, 20, 25}, {2, 4, 8}})
    ->Unit(benchmark::kMillisecond)
    ->UseRealTime();

BENCHMARK_MAIN();
