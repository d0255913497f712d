#include "branchlaw/geometry.hpp"

#include <benchmark/benchmark.h>

using namespace branchlaw;

static void BM_SampleStiefel(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const int m = static_cast<int>(state.range(1));
    std::uint64_t i = 0;
    for (auto _ : state) benchmark::DoNotOptimize(sample_stiefel(n, m, i++));
}
BENCHMARK(BM_SampleStiefel)->Args({5, 1})->Args({6, 2})->Args({10, 4});

static void BM_SampleGroup(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const int m = static_cast<int>(state.range(1));
    std::uint64_t i = 0;
    for (auto _ : state)
        benchmark::DoNotOptimize(sample_group(n, m, GroupKind::SU, 0.3, i++));
}
BENCHMARK(BM_SampleGroup)->Args({4, 2})->Args({6, 3});

static void BM_McT1(benchmark::State& state) {
    Eigen::MatrixXd z = Eigen::MatrixXd::Zero(6, 2);
    z(0, 0) = 0.3;
    z(1, 1) = 0.2;
    for (auto _ : state)
        benchmark::DoNotOptimize(mc_T1(6, 2, z, state.range(0), 7));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_McT1)->Arg(10000)->Arg(100000)->Unit(benchmark::kMillisecond);

static void BM_Jacobian(benchmark::State& state) {
    const GroupElement g = sample_group(5, 2, GroupKind::SU, 0.3, 11);
    const GroupElement h = sample_group(5, 2, GroupKind::SO, 0.3, 12);
    const Eigen::MatrixXcd z = mobius_action(h, Eigen::MatrixXcd::Zero(5, 2));
    for (auto _ : state) benchmark::DoNotOptimize(jacobian(g, z));
}
BENCHMARK(BM_Jacobian);

BENCHMARK_MAIN();
