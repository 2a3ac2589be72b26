#include "biquot/biquotient.hpp"
#include "biquot/rank_one.hpp"
#include "biquot/scan.hpp"
#include "biquot/t1.hpp"
#include "biquot/t2.hpp"
#include "biquot/t3.hpp"

#include <benchmark/benchmark.h>

using namespace biquot;

static void BM_Factor(benchmark::State& state)
{
    const Integer n = Integer(1000003) * Integer(1000033);
    for (auto _ : state)
        benchmark::DoNotOptimize(factor(n));
}
BENCHMARK(BM_Factor);

static void BM_QuotientRing(benchmark::State& state)
{
    for (auto _ : state)
        benchmark::DoNotOptimize(quotient_ring(t3_action()));
}
BENCHMARK(BM_QuotientRing);

static void BM_T1Pipeline(benchmark::State& state)
{
    for (auto _ : state)
        benchmark::DoNotOptimize(t1_pipeline(Integer(6), Integer(8)));
}
BENCHMARK(BM_T1Pipeline);

static void BM_T2Class(benchmark::State& state)
{
    for (auto _ : state)
        benchmark::DoNotOptimize(t2_det_class(7, -3));
}
BENCHMARK(BM_T2Class);

static void BM_RankOne(benchmark::State& state)
{
    const QuadricSystem s = t3_kernel_system(2, 3, 5);
    for (auto _ : state)
        benchmark::DoNotOptimize(rank_one_elements(s));
}
BENCHMARK(BM_RankOne);

static void BM_Freeness(benchmark::State& state)
{
    const TorusActionMatrix a = t3_action();
    for (auto _ : state)
        benchmark::DoNotOptimize(stabilizer_oracle(a, 12));
}
BENCHMARK(BM_Freeness);

static void BM_Scan(benchmark::State& state)
{
    const auto family = static_cast<Family>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(scan(family, static_cast<int>(state.range(1)), 1));
}
BENCHMARK(BM_Scan)->Args({0, 10})->Args({1, 10})->Args({2, 4})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
