#include "branchlaw/radial_ops.hpp"

#include <benchmark/benchmark.h>

using namespace branchlaw;

static void BM_BuildPsi(benchmark::State& state) {
    const int m = static_cast<int>(state.range(0));
    const int k = static_cast<int>(state.range(1));
    for (auto _ : state) benchmark::DoNotOptimize(build_psi(m, k));
}
BENCHMARK(BM_BuildPsi)->Args({2, 6})->Args({3, 6})->Args({3, 10})->Args({4, 8});

static void BM_ApplyL1(benchmark::State& state) {
    const int m = static_cast<int>(state.range(0));
    const int k = static_cast<int>(state.range(1));
    const int n = m + 4;
    const EvenSymPoly psi = build_psi(m, k);
    for (auto _ : state) benchmark::DoNotOptimize(apply_L1(psi, n));
}
BENCHMARK(BM_ApplyL1)->Args({2, 6})->Args({3, 6})->Args({3, 8});

static void BM_VerifyRecurrence(benchmark::State& state) {
    const int m = static_cast<int>(state.range(0));
    const int k_max = static_cast<int>(state.range(1));
    const int n = m + 4;
    for (auto _ : state) benchmark::DoNotOptimize(verify_recurrence(n, m, k_max));
}
BENCHMARK(BM_VerifyRecurrence)->Args({2, 8})->Args({3, 8})->Unit(benchmark::kMillisecond);

static void BM_EvaluateExact(benchmark::State& state) {
    const int m = 3;
    const EvenSymPoly psi = build_psi(m, static_cast<int>(state.range(0)));
    const std::vector<Rational> x{Rational(1, 3), Rational(-2, 5), Rational(7, 11)};
    for (auto _ : state) benchmark::DoNotOptimize(evaluate(psi, x));
}
BENCHMARK(BM_EvaluateExact)->Arg(4)->Arg(8)->Arg(12);

BENCHMARK_MAIN();
