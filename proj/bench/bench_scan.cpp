// Serial reference kernels against their OpenMP counterparts.

#include "cubelaw/oracle.hpp"
#include "cubelaw/quadratic_form.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace cubelaw;

Int fundamental_near(long start) {
  const auto& Q = FieldDescriptor::rationals();
  for (long d = start;; --d) {
    if (d % 4 == 0 || is_perfect_square(Int(d < 0 ? -d : d))) continue;
    if (is_fundamental(BaseElement(Q, d))) return Int(d);
  }
}

void BM_ScanReducedSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(scan_reduced_cubes_serial(state.range(0)).passed);
}
void BM_ScanReducedParallel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(scan_reduced_cubes(state.range(0)).passed);
}

RandomSpec spec_for(long count) {
  RandomSpec s;
  s.seed = 7;
  s.count = count;
  return s;
}

void BM_CubeLawSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(scan_cube_law_serial(spec_for(state.range(0))).passed);
}
void BM_CubeLawParallel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(scan_cube_law(spec_for(state.range(0))).passed);
}

void BM_EnumerateSerial(benchmark::State& state) {
  Int D = fundamental_near(-state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_reduced_serial(D).size());
}
void BM_EnumerateParallel(benchmark::State& state) {
  Int D = fundamental_near(-state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_reduced(D).size());
}

}  // namespace

BENCHMARK(BM_ScanReducedSerial)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ScanReducedParallel)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CubeLawSerial)->Arg(200)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CubeLawParallel)->Arg(200)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EnumerateSerial)->Arg(100000)->Arg(900000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EnumerateParallel)->Arg(100000)->Arg(900000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
