#include "adoheston/sim.hpp"
#include "params.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace adoheston;

void BM_SimulateQ(benchmark::State& state)
{
    const ModelParams mp = oracle::dynamics_params();
    SimConfig cfg;
    cfg.alpha = 0.1;
    cfg.n_paths = 1000;
    cfg.n_steps = 200;
    cfg.record_stride = cfg.n_steps;
    cfg.threads = static_cast<unsigned>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(simulate_q(mp, cfg));
}
BENCHMARK(BM_SimulateQ)->Arg(1)->Arg(4)->UseRealTime()->Unit(benchmark::kMillisecond);

} // namespace
