#include "quadcong/congruence.hpp"
#include "quadcong/dedekind.hpp"

#include <benchmark/benchmark.h>

using namespace quadcong;

static void BM_dedekind_sum(benchmark::State& state) {
    Int k = Int(10) << state.range(0);  // 10 * 2^n
    Int h = k / 3 + 1;
    while (gcd(h, k) != 1) ++h;
    for (auto _ : state) benchmark::DoNotOptimize(dedekind_sum(h, k));
}
BENCHMARK(BM_dedekind_sum)->DenseRange(4, 20, 4);

static void BM_expand(benchmark::State& state) {
    Int delta = 32 * state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(expand(make_quad_irr(1, 0, delta)));
}
BENCHMARK(BM_expand)->Arg(163)->Arg(967)->Arg(99991);

static void BM_class_number_imag(benchmark::State& state) {
    Int delta = -8 * state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(class_number_imag(delta));
}
BENCHMARK(BM_class_number_imag)->Arg(163)->Arg(967)->Arg(99991);

static void BM_row(benchmark::State& state) {
    Int p(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(row(p));
}
BENCHMARK(BM_row)->Arg(163)->Arg(967);

BENCHMARK_MAIN();
