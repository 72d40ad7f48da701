// Compares the OpenMP connectivity kernels against their serial reference
// implementations, and times the full solver per instance size.

#include <benchmark/benchmark.h>

#include "cubictour/assemble.hpp"
#include "cubictour/connectivity.hpp"
#include "cubictour/generate.hpp"

using namespace cubictour;

static void BM_edge_connectivity_serial(benchmark::State& state) {
  Multigraph g = random_cubic_3ec(static_cast<int>(state.range(0)), 1);
  for (auto _ : state)
    benchmark::DoNotOptimize(edge_connectivity_serial(g));
}
BENCHMARK(BM_edge_connectivity_serial)->Arg(50)->Arg(100)->Arg(200);

static void BM_edge_connectivity_parallel(benchmark::State& state) {
  Multigraph g = random_cubic_3ec(static_cast<int>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(edge_connectivity(g));
}
BENCHMARK(BM_edge_connectivity_parallel)->Arg(50)->Arg(100)->Arg(200);

static void BM_essential_3cut_serial(benchmark::State& state) {
  Multigraph g = random_cubic_3ec(static_cast<int>(state.range(0)), 1);
  for (auto _ : state)
    benchmark::DoNotOptimize(find_essential_3cut_serial(g));
}
BENCHMARK(BM_essential_3cut_serial)->Arg(50)->Arg(100)->Arg(200);

static void BM_essential_3cut_parallel(benchmark::State& state) {
  Multigraph g = random_cubic_3ec(static_cast<int>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(find_essential_3cut(g));
}
BENCHMARK(BM_essential_3cut_parallel)->Arg(50)->Arg(100)->Arg(200);

static void BM_solve(benchmark::State& state) {
  Multigraph g = random_cubic_3ec(static_cast<int>(state.range(0)), 1);
  for (auto _ : state) {
    Solution sol = solve(g);
    benchmark::DoNotOptimize(sol.certificate.tour_edges);
  }
}
BENCHMARK(BM_solve)->Arg(50)->Arg(100)->Arg(200)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
