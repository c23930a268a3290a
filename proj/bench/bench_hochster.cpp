// Serial reference kernel against the OpenMP kernel on circulants and
// random graphs.

#include <benchmark/benchmark.h>

#include "creg/betti.hpp"
#include "creg/graph.hpp"
#include "creg/verify.hpp"

namespace {

creg::Graph bench_graph(int n) {
  if (n % 2 == 0) return creg::cubic_circulant(n / 2, 1);
  return creg::circulant_without_jump(n, 1);
}

void BM_serial(benchmark::State& state) {
  const auto g = bench_graph(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(creg::hochster_betti_table_serial(g, {}));
}

void BM_parallel(benchmark::State& state) {
  const auto g = bench_graph(static_cast<int>(state.range(0)));
  creg::HochsterOptions opts;
  opts.workers = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(creg::hochster_betti_table(g, {}, opts));
}

void BM_parallel_nomemo(benchmark::State& state) {
  const auto g = bench_graph(static_cast<int>(state.range(0)));
  creg::HochsterOptions opts;
  opts.memoize = false;
  for (auto _ : state) benchmark::DoNotOptimize(creg::hochster_betti_table(g, {}, opts));
}

void BM_random(benchmark::State& state) {
  std::uint64_t seed = 7;
  const auto g = creg::random_graph(seed, static_cast<int>(state.range(0)), static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(creg::hochster_betti_table(g, {}));
}

}  // namespace

BENCHMARK(BM_serial)->Arg(10)->Arg(12)->Arg(14)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_parallel)->ArgsProduct({{10, 12, 14}, {1, 4}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_parallel_nomemo)->Arg(12)->Arg(14)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_random)->Arg(12)->Arg(14)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
