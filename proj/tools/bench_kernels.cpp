#include <benchmark/benchmark.h>

#include "latpoly/determinant.hpp"
#include "latpoly/spaces.hpp"

using namespace latpoly;

namespace {

LatticeDiagram staircase(int n) {
    std::vector<Cell> cells;
    int r = 0;
    // Parts n, n-1, ..., 1 truncated to n cells.
    for (int len = n; len >= 1 && static_cast<int>(cells.size()) < n; --len, ++r)
        for (int c = 0; c < len && static_cast<int>(cells.size()) < n; ++c)
            cells.push_back({r, c});
    return LatticeDiagram(std::move(cells));
}

void BM_delta_parallel(benchmark::State& state) {
    const LatticeDiagram d = staircase(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(delta(d));
}

void BM_delta_serial(benchmark::State& state) {
    const LatticeDiagram d = staircase(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(delta_serial(d));
}

void BM_closure_parallel(benchmark::State& state) {
    const Polynomial p = delta(partition_cells(Partition({2, 2, 1})));
    for (auto _ : state) benchmark::DoNotOptimize(derivative_closure(p));
}

void BM_closure_serial(benchmark::State& state) {
    const Polynomial p = delta(partition_cells(Partition({2, 2, 1})));
    for (auto _ : state) benchmark::DoNotOptimize(derivative_closure_serial(p));
}

void BM_mkij_parallel(benchmark::State& state) {
    const Partition mu({3, 2});
    for (auto _ : state) benchmark::DoNotOptimize(build_mkij(mu, {0, 0}, 2));
}

void BM_mkij_serial(benchmark::State& state) {
    const Partition mu({3, 2});
    for (auto _ : state) benchmark::DoNotOptimize(build_mkij_serial(mu, {0, 0}, 2));
}

void BM_xspace(benchmark::State& state) {
    const LatticeDiagram d =
        partition_cells(Partition(std::vector<int>(state.range(0), 1)));
    for (auto _ : state) benchmark::DoNotOptimize(x_space(d));
}

}  // namespace

BENCHMARK(BM_delta_serial)->Arg(6)->Arg(7)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_delta_parallel)->Arg(6)->Arg(7)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_closure_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_closure_parallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_mkij_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_mkij_parallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_xspace)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
