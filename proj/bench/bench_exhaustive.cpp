#include <benchmark/benchmark.h>

#include "fibcordial/families.hpp"
#include "fibcordial/oracle.hpp"

using namespace fibcordial;

namespace {

// K_n has no balanced subset for the orders used here, so both kernels scan
// every subset of the requested size.
void complete_args(benchmark::internal::Benchmark* b) {
  for (int n : {20, 24, 28}) b->Args({n, n / 3});
}

void BM_FirstBalancedSerial(benchmark::State& state) {
  const auto g = build_complete(static_cast<int>(state.range(0)));
  const auto adj = kernels::adjacency_masks(g);
  const auto size = static_cast<unsigned>(state.range(1));
  for (auto _ : state)
    benchmark::DoNotOptimize(kernels::first_balanced_subset_serial(adj, g.edge_count(), size));
}
BENCHMARK(BM_FirstBalancedSerial)->Apply(complete_args)->Unit(benchmark::kMillisecond);

void BM_FirstBalancedParallel(benchmark::State& state) {
  const auto g = build_complete(static_cast<int>(state.range(0)));
  const auto adj = kernels::adjacency_masks(g);
  const auto size = static_cast<unsigned>(state.range(1));
  for (auto _ : state)
    benchmark::DoNotOptimize(kernels::first_balanced_subset_parallel(adj, g.edge_count(), size));
}
BENCHMARK(BM_FirstBalancedParallel)->Apply(complete_args)->Unit(benchmark::kMillisecond)->UseRealTime();

// A circulant where the witness sits late in the order.
void BM_ExhaustiveCirculant(benchmark::State& state) {
  const auto g = build_circulant(static_cast<int>(state.range(0)), {1, 2, 3});
  const auto pool = Labeling::pool_for_graph(g);
  const bool parallel = state.range(1) != 0;
  for (auto _ : state) benchmark::DoNotOptimize(exhaustive_exists(g, pool, {kDefaultExhaustiveLimit, parallel}));
}
BENCHMARK(BM_ExhaustiveCirculant)->ArgsProduct({{20, 23, 24}, {0, 1}})->Unit(benchmark::kMillisecond)->UseRealTime();

}  // namespace

BENCHMARK_MAIN();
