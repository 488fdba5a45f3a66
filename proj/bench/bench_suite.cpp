// Serial reference against the OpenMP runner for the heavier suite groups.

#include "airyderiv/suite.hpp"

#include <benchmark/benchmark.h>

using namespace airyderiv;

namespace {

void run(benchmark::State& state, Group g, bool parallel)
{
    SuiteConfig cfg;
    cfg.n_max = static_cast<unsigned>(state.range(0));
    for (auto _ : state) {
        auto r = run_group(g, cfg, parallel);
        benchmark::DoNotOptimize(r.records.data());
    }
}

void BM_equivalences_serial(benchmark::State& s) { run(s, Group::equivalences, false); }
void BM_equivalences_parallel(benchmark::State& s) { run(s, Group::equivalences, true); }
void BM_certificate_serial(benchmark::State& s) { run(s, Group::certificate, false); }
void BM_certificate_parallel(benchmark::State& s) { run(s, Group::certificate, true); }

void BM_zeros(benchmark::State& state, bool parallel)
{
    const auto n = static_cast<unsigned>(state.range(0));
    for (auto _ : state) {
        auto rows = zeros_table(n, n, parallel);
        benchmark::DoNotOptimize(rows.data());
    }
}
void BM_zeros_serial(benchmark::State& s) { BM_zeros(s, false); }
void BM_zeros_parallel(benchmark::State& s) { BM_zeros(s, true); }

}  // namespace

BENCHMARK(BM_equivalences_serial)->Arg(40)->Arg(80)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_equivalences_parallel)->Arg(40)->Arg(80)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_certificate_serial)->Arg(40)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_certificate_parallel)->Arg(40)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_zeros_serial)->Arg(60)->Arg(100)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_zeros_parallel)->Arg(60)->Arg(100)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
