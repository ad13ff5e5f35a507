#include <benchmark/benchmark.h>

#include "adcmimo/allocation.hpp"

using namespace adcmimo;

namespace {

void BM_CostJ(benchmark::State& state) {
    const std::size_t n = std::size_t(state.range(0));
    const ChannelMatrix h = gen_ill_conditioned(n, 1000.0, 1);
    const BitAllocation b = BitAllocation::uniform(n, 2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(cost_j(h, b, 10.0, 1.0));
    }
}
BENCHMARK(BM_CostJ)->Arg(8)->Arg(12);

void BM_FullSearch(benchmark::State& state) {
    const std::size_t n = std::size_t(state.range(0));
    const ChannelMatrix h = gen_ill_conditioned(n, 1000.0, 1);
    const PowerModel pm = PowerModel::default_budget(n);
    for (auto _ : state) {
        benchmark::DoNotOptimize(full_search(h, 10.0, 1.0, pm));
    }
}
BENCHMARK(BM_FullSearch)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_GaSearch(benchmark::State& state) {
    const std::size_t n = std::size_t(state.range(0));
    const ChannelMatrix h = gen_ill_conditioned(n, 1000.0, 1);
    const PowerModel pm = PowerModel::default_budget(n);
    GaParams ga = GaParams::defaults_for(n);
    ga.t = 1e-300;
    for (auto _ : state) {
        benchmark::DoNotOptimize(ga_search(h, 10.0, 1.0, pm, ga));
    }
}
BENCHMARK(BM_GaSearch)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
