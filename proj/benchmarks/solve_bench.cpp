#include <benchmark/benchmark.h>

#include "splitkit/aba.hpp"
#include "splitkit/cli/generate.hpp"
#include "splitkit/split_aba.hpp"
#include "splitkit/split_finder.hpp"

using namespace splitkit;

namespace {

// Three assumptions per layer, four rules each.
Abaf layered(const benchmark::State& state) {
  return cli::layered_abaf(static_cast<std::size_t>(state.range(0)), 3, 4, 11);
}

void BM_Direct(benchmark::State& state) {
  const Abaf d = layered(state);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_extensions(d, Semantics::kPreferred, false, 62));
}

void BM_SplitOnce(benchmark::State& state) {
  const Abaf d = layered(state);
  for (auto _ : state) {
    const IdSet s = find_balanced_splitting(d);
    benchmark::DoNotOptimize(split_solve(d, s, Semantics::kPreferred));
  }
}

void BM_Recursive(benchmark::State& state) {
  const Abaf d = layered(state);
  for (auto _ : state) benchmark::DoNotOptimize(solve_recursive(d, Semantics::kPreferred, 6));
}

void BM_QuasiSearch(benchmark::State& state) {
  const Abaf d = layered(state);
  for (auto _ : state) benchmark::DoNotOptimize(find_quasi_splitting(d));
}

}  // namespace

BENCHMARK(BM_Direct)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SplitOnce)->DenseRange(2, 6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Recursive)->DenseRange(2, 8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_QuasiSearch)->DenseRange(2, 8)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
