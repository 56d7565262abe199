#include "adoheston/pricing.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace adoheston;

void BM_CarrMadan(benchmark::State& state)
{
    FwdStartSpec spec;
    spec.s = 0.5;
    spec.T = 0.75;
    FftGrid grid;
    grid.n = static_cast<std::size_t>(state.range(0));
    const ForwardCF cf = bs_forward_cf(spec, 0.5);
    for (auto _ : state)
        benchmark::DoNotOptimize(carr_madan_forward_call(spec, cf, grid));
}
BENCHMARK(BM_CarrMadan)->RangeMultiplier(4)->Range(1024, 16384);

} // namespace
