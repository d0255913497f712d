#include "branchlaw/plancherel.hpp"
#include "branchlaw/spectral_transform.hpp"

#include <benchmark/benchmark.h>

using namespace branchlaw;

static void BM_Density(benchmark::State& state) {
    const HahnParams p = hahn_params(7, 3);
    double x = 0.3;
    for (auto _ : state) {
        benchmark::DoNotOptimize(density(x, p));
        x = (x < 30.0) ? x + 0.37 : 0.3;
    }
}
BENCHMARK(BM_Density);

static void BM_TotalMass(benchmark::State& state) {
    const PlancherelMeasure mu = make_measure(hahn_params(6, 2));
    for (auto _ : state) benchmark::DoNotOptimize(total_mass(mu));
}
BENCHMARK(BM_TotalMass)->Unit(benchmark::kMillisecond);

static void BM_GramEntry(benchmark::State& state) {
    const int k = static_cast<int>(state.range(0));
    const HahnParams p = hahn_params(6, 2);
    const PlancherelMeasure mu = make_measure(p, MeasureOptions{1e-30, 2 * k, {}});
    for (auto _ : state) {
        const double g = integrate(
            [&](double y) { return hahn_S(k, y, p) * hahn_S(k, y, p); }, mu);
        benchmark::DoNotOptimize(g);
    }
}
BENCHMARK(BM_GramEntry)->Arg(2)->Arg(6)->Unit(benchmark::kMillisecond);

static void BM_VerifyOrthogonality(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(verify_orthogonality(5, 1, static_cast<int>(state.range(0)), 1e-8));
}
BENCHMARK(BM_VerifyOrthogonality)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

static void BM_OperatorMatrix(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(operator_matrix(6, 2, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_OperatorMatrix)->Arg(4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
