#include <benchmark/benchmark.h>

#include "onth/cubic_forms.hpp"

using namespace onth;

static void BM_EnumerateSerial(benchmark::State& state) {
    Lattice lat = state.range(1) ? Lattice::Ldual : Lattice::L;
    Sign sign = state.range(2) ? Sign::Pos : Sign::Neg;
    for (auto _ : state) {
        auto v = enumerate_orbits_serial(lat, sign, state.range(0));
        benchmark::DoNotOptimize(v.data());
    }
}

static void BM_EnumerateParallel(benchmark::State& state) {
    Lattice lat = state.range(1) ? Lattice::Ldual : Lattice::L;
    Sign sign = state.range(2) ? Sign::Pos : Sign::Neg;
    for (auto _ : state) {
        auto v = enumerate_orbits(lat, sign, state.range(0));
        benchmark::DoNotOptimize(v.data());
    }
}

// args: bound, dual lattice flag, positive sign flag
#define ONTH_ARGS                                                                                  \
    Args({20000, 0, 1})->Args({20000, 0, 0})->Args({20000, 1, 1})->Args({20000, 1, 0})             \
        ->Unit(benchmark::kMillisecond)

BENCHMARK(BM_EnumerateSerial)->ONTH_ARGS;
BENCHMARK(BM_EnumerateParallel)->ONTH_ARGS;

BENCHMARK_MAIN();
