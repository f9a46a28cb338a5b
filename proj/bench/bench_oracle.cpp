// SPDX-License-Identifier: Apache-2.0
// Serial reference kernels against their OpenMP counterparts.
#include "octaq/oracle.hpp"

#include <benchmark/benchmark.h>

using namespace octaq;

namespace {

const QuarticCoefficients& sample() {
  static const QuarticCoefficients q =
      QuarticCoefficients::make(1, 1, -1, frac(39, 200));  // thin double surface
  return q;
}

void BM_GridSerial(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Rational L = choose_box(sample());
  for (auto _ : state) benchmark::DoNotOptimize(evaluate_grid_serial(sample(), L, n));
  state.SetItemsProcessed(state.iterations() * (n + 1LL) * (n + 1) * (n + 1));
}

void BM_GridParallel(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Rational L = choose_box(sample());
  for (auto _ : state) benchmark::DoNotOptimize(evaluate_grid(sample(), L, n));
  state.SetItemsProcessed(state.iterations() * (n + 1LL) * (n + 1) * (n + 1));
}

void BM_ComponentsSerial(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  SignGrid g = evaluate_grid(sample(), choose_box(sample()), n);
  for (auto _ : state) benchmark::DoNotOptimize(count_components_serial(g));
  state.SetItemsProcessed(state.iterations() * static_cast<long long>(n) * n * n);
}

void BM_ComponentsParallel(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  SignGrid g = evaluate_grid(sample(), choose_box(sample()), n);
  for (auto _ : state) benchmark::DoNotOptimize(count_components(g));
  state.SetItemsProcessed(state.iterations() * static_cast<long long>(n) * n * n);
}

}  // namespace

BENCHMARK(BM_GridSerial)->Arg(32)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GridParallel)->Arg(32)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ComponentsSerial)->Arg(32)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ComponentsParallel)->Arg(32)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
