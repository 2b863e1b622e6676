// Parallel kernels against their serial references.

#include <vector>

#include <benchmark/benchmark.h>

#include "zcx/classify.hpp"
#include "zcx/enumerate.hpp"
#include "zcx/gentree.hpp"
#include "zcx/reference.hpp"

using namespace zcx;

static void BM_census(benchmark::State& state)
{
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(census(n));
}
BENCHMARK(BM_census)->Arg(9)->Arg(10)->Arg(11)->Unit(benchmark::kMillisecond)->UseRealTime();

static void BM_census_serial(benchmark::State& state)
{
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(census_serial(n));
}
BENCHMARK(BM_census_serial)->Arg(9)->Arg(10)->Arg(11)->Unit(benchmark::kMillisecond)->UseRealTime();

static void BM_count_levels(benchmark::State& state)
{
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(count_levels(n));
}
BENCHMARK(BM_count_levels)->Arg(30)->Arg(45)->Unit(benchmark::kMillisecond)->UseRealTime();

static void BM_count_levels_serial(benchmark::State& state)
{
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(count_levels_serial(n));
}
BENCHMARK(BM_count_levels_serial)->Arg(30)->Arg(45)->Unit(benchmark::kMillisecond)->UseRealTime();

static const std::vector<Polyomino>& shapes()
{
    static const auto all = all_convex(9);
    return all;
}

static void BM_degree_pair(benchmark::State& state)
{
    for (auto _ : state)
        for (const auto& p : shapes()) benchmark::DoNotOptimize(degree_pair(p));
}
BENCHMARK(BM_degree_pair)->Unit(benchmark::kMillisecond);

static void BM_degree_pair_bfs(benchmark::State& state)
{
    for (auto _ : state)
        for (const auto& p : shapes()) benchmark::DoNotOptimize(reference::degree_pair_bfs(p));
}
BENCHMARK(BM_degree_pair_bfs)->Unit(benchmark::kMillisecond);

static void BM_four_stack(benchmark::State& state)
{
    for (auto _ : state)
        for (const auto& p : shapes()) benchmark::DoNotOptimize(is_four_stack(p));
}
BENCHMARK(BM_four_stack)->Unit(benchmark::kMillisecond);

static void BM_four_stack_scan(benchmark::State& state)
{
    for (auto _ : state)
        for (const auto& p : shapes()) benchmark::DoNotOptimize(reference::is_four_stack_scan(p));
}
BENCHMARK(BM_four_stack_scan)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
