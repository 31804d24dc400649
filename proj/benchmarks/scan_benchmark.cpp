#include <benchmark/benchmark.h>

#include "cbf/constructions.hpp"
#include "cbf/enumeration.hpp"
#include "cbf/tables.hpp"
#include "cbf/verify.hpp"

using namespace cbf;

// Exhaustive non-expandability scan of S u U over Z_2^n.
static void BM_NonExpandableScan(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const Code code = build_expanded(Bipartition::classic(2), n, n - 3);
    for (auto _ : state) benchmark::DoNotOptimize(is_non_expandable(code).non_expandable);
    state.counters["q^n"] = static_cast<double>(space_size(2, static_cast<std::size_t>(n)));
}
BENCHMARK(BM_NonExpandableScan)->DenseRange(10, 20, 2)->Unit(benchmark::kMillisecond);

static void BM_NonExpandableScanThreads(benchmark::State& state) {
    const Code code = build_expanded(Bipartition::classic(2), 20, 17);
    const ScanOptions options{kDefaultGuard, static_cast<unsigned>(state.range(0))};
    for (auto _ : state) benchmark::DoNotOptimize(is_non_expandable(code, options).non_expandable);
}
BENCHMARK(BM_NonExpandableScanThreads)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_CrossBifixFree(benchmark::State& state) {
    const Code code = build_expanded(Bipartition::classic(2), static_cast<int>(state.range(0)), 12);
    for (auto _ : state) benchmark::DoNotOptimize(is_cross_bifix_free(code).cross_bifix_free);
    state.counters["words"] = static_cast<double>(code.size());
}
BENCHMARK(BM_CrossBifixFree)->Arg(16)->Arg(18)->Arg(20);

// Cold memo: every iteration rebuilds the whole U(m) chain.
static void BM_BuildU(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const ExpansionParams params(n, n - 4);
    for (auto _ : state) {
        SuffixClassCache cache;
        benchmark::DoNotOptimize(build_U_shared(params, Bipartition::classic(2), n, cache)->size());
    }
}
BENCHMARK(BM_BuildU)->DenseRange(12, 20, 4)->Unit(benchmark::kMillisecond);

static void BM_CountUClosed(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(count_U_closed(Bipartition(4, {0, 1}), n, n - 2 - n / 8).closed_form);
}
BENCHMARK(BM_CountUClosed)->Arg(16)->Arg(64)->Arg(256);

static void BM_ReproduceTables(benchmark::State& state) {
    for (auto _ : state) {
        SuffixClassCache::global().clear();
        benchmark::DoNotOptimize(reproduce_tables(2).consistent());
    }
}
BENCHMARK(BM_ReproduceTables)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
