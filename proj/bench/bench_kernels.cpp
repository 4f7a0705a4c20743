// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include "kronforge/characters.hpp"
#include "kronforge/kronecker.hpp"
#include "kronforge/saxl.hpp"

using namespace kronforge;

static void BM_TableSerial(benchmark::State& state)
{
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(build_table_serial(n));
}
BENCHMARK(BM_TableSerial)->Arg(10)->Arg(12)->Arg(15)->Unit(benchmark::kMillisecond);

static void BM_TableParallel(benchmark::State& state)
{
    const int n = static_cast<int>(state.range(0));
    const int threads = static_cast<int>(state.range(1));
    for (auto _ : state) {
        CharacterMemo memo;  // cold memo each time, like the serial build
        benchmark::DoNotOptimize(build_table(n, threads, memo));
    }
}
BENCHMARK(BM_TableParallel)->Args({10, 0})->Args({12, 0})->Args({15, 0})->Args({15, 1})->Unit(benchmark::kMillisecond);

static void BM_StaircaseSquare(benchmark::State& state)
{
    const int k = static_cast<int>(state.range(0));
    const bool parallel = state.range(1) != 0;
    CharacterMemo memo;
    const CharacterTable table = build_table(triangular(k), 0, memo);
    const std::size_t r = table.index_of(staircase(k));
    for (auto _ : state) {
        if (parallel)
            benchmark::DoNotOptimize(product_coefficients(table, r, r, 0));
        else
            benchmark::DoNotOptimize(product_coefficients_serial(table, r, r));
    }
}
BENCHMARK(BM_StaircaseSquare)->Args({4, 0})->Args({4, 1})->Args({5, 0})->Args({5, 1})->Unit(benchmark::kMicrosecond);

static void BM_DichotomySweep(benchmark::State& state)
{
    Engine engine(RunConfig{kDefaultNMax, {}, static_cast<int>(state.range(1)), true});
    const int n = static_cast<int>(state.range(0));
    engine.table(n);
    for (auto _ : state)
        benchmark::DoNotOptimize(dichotomy_sweep(engine, n));
}
BENCHMARK(BM_DichotomySweep)->Args({7, 1})->Args({7, 0})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
