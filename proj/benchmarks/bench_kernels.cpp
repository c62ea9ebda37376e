#include "regseq/bounds.hpp"
#include "regseq/linrep.hpp"
#include "regseq/sequences.hpp"

#include <benchmark/benchmark.h>

using namespace regseq;

static void BM_UpperNorm(benchmark::State& state) {
    const unsigned n = static_cast<unsigned>(state.range(0));
    const unsigned threads = static_cast<unsigned>(state.range(1));
    for (auto _ : state)
        benchmark::DoNotOptimize(bounds::rn_abs_norm(n, threads).norm_float);
    state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << n));
}
BENCHMARK(BM_UpperNorm)->Args({18, 1})->Args({18, 2})->Args({22, 1})->Args({22, 2})
    ->Unit(benchmark::kMillisecond);

static void BM_LowerSum(benchmark::State& state) {
    const unsigned n = static_cast<unsigned>(state.range(0));
    const unsigned threads = static_cast<unsigned>(state.range(1));
    for (auto _ : state)
        benchmark::DoNotOptimize(bounds::lower_bound_sum_matrix(n, threads));
    state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << n));
}
BENCHMARK(BM_LowerSum)->Args({16, 1})->Args({16, 2})->Args({20, 2})
    ->Unit(benchmark::kMillisecond);

static void BM_EtaTable(benchmark::State& state) {
    const std::uint64_t x = std::uint64_t{1} << state.range(0);
    for (auto _ : state) {
        seq::EtaTable t(x);
        benchmark::DoNotOptimize(t.scaled(x));
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(x));
}
BENCHMARK(BM_EtaTable)->Arg(16)->Arg(20)->Arg(24)->Unit(benchmark::kMillisecond);

static void BM_PartialSumDigits(benchmark::State& state) {
    const linrep::LinearRep rep = linrep::rep_eta();
    const std::uint64_t x = (std::uint64_t{1} << state.range(0)) - 1;
    for (auto _ : state) benchmark::DoNotOptimize(linrep::partial_sum(rep, x));
}
BENCHMARK(BM_PartialSumDigits)->Arg(20)->Arg(40)->Arg(60);

static void BM_Evaluate(benchmark::State& state) {
    const linrep::LinearRep rep = linrep::rep_eta_squared();
    std::uint64_t m = 12345;
    for (auto _ : state) {
        benchmark::DoNotOptimize(linrep::evaluate(rep, m));
        m = m * 2862933555777941757ull + 3037000493ull;
        m >>= 20;
    }
}
BENCHMARK(BM_Evaluate);

BENCHMARK_MAIN();
