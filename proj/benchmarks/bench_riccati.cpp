#include "adoheston/charfn.hpp"
#include "params.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace adoheston;

void BM_RiccatiSeries(benchmark::State& state)
{
    const ModelParams mp = oracle::skew_params(0.1);
    for (auto _ : state)
        benchmark::DoNotOptimize(riccati_series(1.5, 0.0, 0.05, mp));
}
BENCHMARK(BM_RiccatiSeries);

void BM_RiccatiOde(benchmark::State& state)
{
    const ModelParams mp = oracle::skew_params(0.1);
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(riccati_ode(1.5, 1e-4, 0.05, mp, n));
}
BENCHMARK(BM_RiccatiOde)->RangeMultiplier(4)->Range(64, 4096);

} // namespace
