// Serial vs OpenMP sweep over the same grid. Run with OMP_NUM_THREADS set to
// compare scaling.

#include <benchmark/benchmark.h>

#include "entcat/oracle.hpp"

using namespace entcat;

namespace {

const Spectrum4& source() {
    static const auto s = make_spectrum({Rational(2, 5), Rational(2, 5), Rational(1, 10), Rational(1, 10)});
    return s;
}

const Spectrum4& target() {
    static const auto t = make_spectrum({Rational(1, 2), Rational(1, 4), Rational(1, 4), Rational(0)});
    return t;
}

void BM_SweepSerial(benchmark::State& state) {
    const auto grid = default_grid(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(sweep_serial(source(), target(), grid));
    }
    state.SetItemsProcessed(state.iterations() * static_cast<long>(grid.size()));
}

void BM_SweepParallel(benchmark::State& state) {
    const auto grid = default_grid(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(sweep(source(), target(), grid));
    }
    state.SetItemsProcessed(state.iterations() * static_cast<long>(grid.size()));
}

}  // namespace

BENCHMARK(BM_SweepSerial)->Arg(100)->Arg(1000)->Arg(10000)->UseRealTime();
BENCHMARK(BM_SweepParallel)->Arg(100)->Arg(1000)->Arg(10000)->UseRealTime();

BENCHMARK_MAIN();
