#include <benchmark/benchmark.h>

#include "slopelab/checks.hpp"
#include "slopelab/generators.hpp"
#include "slopelab/nearby.hpp"

namespace {

using slopelab::Execution;

Execution exec_of(const benchmark::State& st) { return st.range(0) ? Execution::parallel : Execution::serial; }

const slopelab::Corpus& corpus() {
    static const auto c = slopelab::make_corpus(20240611, {40, 8, 200, 100});
    return c;
}

void BM_Certify(benchmark::State& st) {
    slopelab::Rng rng(11);
    auto m = slopelab::random_module(rng);
    for (auto _ : st) benchmark::DoNotOptimize(slopelab::certify_nearby_slopes(m, 2, {8, 16}, exec_of(st)));
}

void BM_Exhaustion(benchmark::State& st) {
    for (auto _ : st)
        benchmark::DoNotOptimize(slopelab::exhaustion_sweep(corpus().modules, 2, {6, 12}, exec_of(st)));
}

void BM_Witness(benchmark::State& st) {
    for (auto _ : st) benchmark::DoNotOptimize(slopelab::witness_sweep(corpus().modules, 4, exec_of(st)));
}

void BM_Monomial(benchmark::State& st) {
    for (auto _ : st) benchmark::DoNotOptimize(slopelab::monomial_sweep(corpus().models, 3, 2, exec_of(st)));
}

void BM_Blowup(benchmark::State& st) {
    for (auto _ : st) benchmark::DoNotOptimize(slopelab::blowup_sweep(corpus().chains, exec_of(st)));
}

void BM_Roundtrip(benchmark::State& st) {
    for (auto _ : st) benchmark::DoNotOptimize(slopelab::roundtrip_sweep(corpus().exprs, exec_of(st)));
}

}  // namespace

// arg 0 = serial reference, 1 = OpenMP
BENCHMARK(BM_Certify)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Exhaustion)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Witness)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Monomial)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Blowup)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Roundtrip)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
