// Serial reference vs OpenMP kernels.

#include <benchmark/benchmark.h>

#include "cgzic/hk_polytope.hpp"
#include "cgzic/sweep.hpp"

namespace {

const cgzic::ChannelConfig kChain{4, {1.5, 0.3, 0.9}, {3, 10, 2, 5}};

void BM_GridOracleSerial(benchmark::State& state) {
    const double step = 1.0 / double(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(cgzic::grid_oracle_serial(kChain, step));
    }
}

void BM_GridOracleParallel(benchmark::State& state) {
    const double step = 1.0 / double(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(cgzic::grid_oracle(kChain, step));
    }
}

cgzic::SweepSpec map_spec(std::size_t steps) {
    cgzic::SweepSpec s;
    s.a1 = {0.0, 2.0, steps};
    s.a2 = {0.0, 2.0, steps};
    return s;
}

void BM_RegimeMapSerial(benchmark::State& state) {
    const auto spec = map_spec(std::size_t(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(cgzic::regime_map_serial(spec));
    }
}

void BM_RegimeMapParallel(benchmark::State& state) {
    const auto spec = map_spec(std::size_t(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(cgzic::regime_map(spec));
    }
}

} // namespace

BENCHMARK(BM_GridOracleSerial)->Arg(10)->Arg(20)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GridOracleParallel)->Arg(10)->Arg(20)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RegimeMapSerial)->Arg(100)->Arg(200)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RegimeMapParallel)->Arg(100)->Arg(200)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
