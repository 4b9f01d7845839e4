#include <benchmark/benchmark.h>

#include <narop/dimensions.hpp>
#include <narop/rank.hpp>
#include <narop/relation_matrix.hpp>

using namespace narop;

namespace {

void BM_relation_span(benchmark::State& state) {
    const OperadPresentation pres{Family::Partial, 3, 0};
    const long p = state.range(0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(relation_span(pres, p));
    }
}

void BM_matrix_rank(benchmark::State& state) {
    const OperadPresentation pres{Family::Partial, 3, 0};
    const SparseIntMatrix m = relation_span(pres, state.range(0));
    RankOptions options;
    options.mode = state.range(1) ? RankMode::Modular : RankMode::Exact;
    for (auto _ : state) {
        benchmark::DoNotOptimize(matrix_rank(m, options));
    }
    state.counters["columns"] = static_cast<double>(m.columns);
    state.counters["entries"] = static_cast<double>(m.entry_count());
}

void BM_dimension_table(benchmark::State& state) {
    const OperadPresentation pres{Family::Partial, 4, 1};
    const long max_p = state.range(0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(dimension_table(pres, max_p));
    }
}

} // namespace

BENCHMARK(BM_relation_span)->Arg(5)->Arg(6);
BENCHMARK(BM_matrix_rank)
    ->ArgNames({"p", "modular"})
    ->Args({5, 0})
    ->Args({5, 1})
    ->Args({6, 0})
    ->Args({6, 1});
BENCHMARK(BM_dimension_table)->Arg(4)->Arg(5);

BENCHMARK_MAIN();
