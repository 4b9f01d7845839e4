#include <benchmark/benchmark.h>

#include <narop/series.hpp>

using namespace narop;

namespace {

void BM_invert_trinomial(benchmark::State& state) {
    const SparseTrinomial g{state.range(0)};
    const long order = state.range(1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(invert(g, order));
    }
    state.SetComplexityN(order);
}

void BM_stream_inverse(benchmark::State& state) {
    const SparseTrinomial g{8};
    const long bound = state.range(0);
    for (auto _ : state) {
        long count = 0;
        stream_inverse_coefficients(g, bound, [&](long, const Integer&) {
            ++count;
            return true;
        });
        benchmark::DoNotOptimize(count);
    }
}

void BM_lagrange_coefficient(benchmark::State& state) {
    const SparseTrinomial g{state.range(0)};
    const long m = state.range(1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(lagrange_coefficient(g, m));
    }
}

void BM_compose(benchmark::State& state) {
    const long order = state.range(0);
    const ExactSeries f = invert(SparseTrinomial{2}, order);
    const ExactSeries g = SparseTrinomial{2}.expand(order);
    for (auto _ : state) {
        benchmark::DoNotOptimize(compose(f, g));
    }
}

} // namespace

BENCHMARK(BM_invert_trinomial)->Args({2, 128})->Args({2, 512})->Args({8, 512})->Args({8, 2048});
BENCHMARK(BM_stream_inverse)->Arg(512)->Arg(2048)->Arg(8192);
BENCHMARK(BM_lagrange_coefficient)->Args({2, 200})->Args({7, 1171});
BENCHMARK(BM_compose)->Arg(64)->Arg(256);

BENCHMARK_MAIN();
