#include <benchmark/benchmark.h>

#include "viewhedge/greeks.hpp"
#include "viewhedge/hedge_policy.hpp"
#include "viewhedge/mc_harness.hpp"
#include "viewhedge/variance_analytics.hpp"

using namespace viewhedge;

namespace {

const OptionSpec kAtm{100.0, 100.0, 0.05, 0.2, 0.1};
const MarketView kView{0.1, 0.02, VolProcessSpec::ornstein_uhlenbeck(0.2, 2.0, 0.3, 0.3)};

void BM_Price(benchmark::State& state) {
    OptionSpec s = kAtm;
    for (auto _ : state) {
        benchmark::DoNotOptimize(price(s));
        s.spot += 1e-9;
    }
}
BENCHMARK(BM_Price);

void BM_Greeks(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(greeks(kAtm));
}
BENCHMARK(BM_Greeks);

void BM_NStar(benchmark::State& state) {
    const GreeksBundle g = greeks(kAtm);
    for (auto _ : state) benchmark::DoNotOptimize(n_star(g, kView, kAtm.spot, kAtm.rate));
}
BENCHMARK(BM_NStar);

void BM_Coefficients(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(coefficients(kAtm, kView));
}
BENCHMARK(BM_Coefficients);

void BM_FdValidate(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(fd_validate(kAtm, 1e-5));
}
BENCHMARK(BM_FdValidate)->Unit(benchmark::kMillisecond);

// Paths per second for the two-strategy comparison.
void BM_SimulatePaths(benchmark::State& state) {
    SimConfig cfg;
    cfg.view = {0.05, 0.02, VolProcessSpec::linear_drift(0.2, 0.2)};
    cfg.n_paths = static_cast<std::uint64_t>(state.range(0));
    cfg.sigma_mode = state.range(1) ? SigmaMode::Stochastic : SigmaMode::Deterministic;
    cfg.workers = 1;
    for (auto _ : state) benchmark::DoNotOptimize(simulate_paths(cfg));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SimulatePaths)->Args({10000, 0})->Args({10000, 1})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
