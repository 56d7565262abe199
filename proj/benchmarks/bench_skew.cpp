#include "adoheston/skew.hpp"
#include "params.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace adoheston;

void BM_AtmSkew(benchmark::State& state)
{
    const ModelParams mp = oracle::skew_params(state.range(0) / 100.0);
    const double T = 0.05;
    for (auto _ : state)
        benchmark::DoNotOptimize(atm_skew(T, mp));
}
BENCHMARK(BM_AtmSkew)->Arg(10)->Arg(30)->Arg(50);

void BM_SkewCurve(benchmark::State& state)
{
    const ModelParams mp = oracle::skew_params(0.1);
    const std::vector<double> T = log_spaced(1e-3, 0.3, 50);
    const auto threads = static_cast<unsigned>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(skew_curve(T, mp, {}, threads));
}
BENCHMARK(BM_SkewCurve)->Arg(1)->Arg(4)->UseRealTime()->Unit(benchmark::kMillisecond);

} // namespace
