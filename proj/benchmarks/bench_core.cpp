#include "acs/bernoulli.hpp"
#include "acs/betti3.hpp"
#include "acs/genus.hpp"
#include "acs/report.hpp"
#include "acs/valuation.hpp"

#include <benchmark/benchmark.h>

namespace {

void BM_FactorialValuation(benchmark::State& state) {
    const unsigned long n = state.range(0);
    for (auto _ : state)
        benchmark::DoNotOptimize(acs::factorial_valuation(n, 2));
}
BENCHMARK(BM_FactorialValuation)->Arg(1000)->Arg(1000000);

void BM_BernoulliWarm(benchmark::State& state) {
    const unsigned long m = state.range(0);
    acs::bernoulli_precompute(m);
    for (auto _ : state) benchmark::DoNotOptimize(acs::bernoulli(m));
}
BENCHMARK(BM_BernoulliWarm)->Arg(64)->Arg(256)->Arg(512);

void BM_EtaSquared(benchmark::State& state) {
    const unsigned long k = state.range(0);
    acs::bernoulli_precompute(2 * k);
    for (auto _ : state) benchmark::DoNotOptimize(acs::eta_squared(k));
}
BENCHMARK(BM_EtaSquared)->Arg(8)->Arg(64)->Arg(256);

void BM_Betti3Status(benchmark::State& state) {
    const unsigned long dim = state.range(0);
    acs::bernoulli_precompute(dim / 4);
    for (auto _ : state) benchmark::DoNotOptimize(acs::betti3_status(dim));
}
BENCHMARK(BM_Betti3Status)->Arg(8)->Arg(512)->Arg(2048);

void BM_ScanSequential(benchmark::State& state) {
    const unsigned long max_dim = state.range(0);
    acs::bernoulli_precompute(max_dim / 4);
    for (auto _ : state) benchmark::DoNotOptimize(acs::scan(max_dim, false));
}
BENCHMARK(BM_ScanSequential)->Arg(256)->Arg(1024)->Unit(benchmark::kMillisecond);

void BM_ScanParallel(benchmark::State& state) {
    const unsigned long max_dim = state.range(0);
    acs::bernoulli_precompute(max_dim / 4);
    for (auto _ : state) benchmark::DoNotOptimize(acs::scan(max_dim, true));
}
BENCHMARK(BM_ScanParallel)->Arg(256)->Arg(1024)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
