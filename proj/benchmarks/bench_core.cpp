#include "cesaro/carleson.hpp"
#include "cesaro/corpus.hpp"
#include "cesaro/spaces.hpp"

#include <benchmark/benchmark.h>

using namespace cesaro;

static void BM_Moments(benchmark::State& state) {
    const Measure mu = Measure::mixture({Measure::power_density(-0.5), Measure::dyadic_atoms(1.0)});
    for (auto _ : state) benchmark::DoNotOptimize(moments(mu, static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_Moments)->Arg(400)->Arg(1 << 16);

static void BM_CesaroMuS(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const PowerSeries f = blaschke_factor(0.5, n);
    const Measure mu = Measure::power_density(-0.5);
    for (auto _ : state) benchmark::DoNotOptimize(cesaro_mu_s(f, mu, 0.5, n));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_CesaroMuS)->RangeMultiplier(4)->Range(256, 4096)->Complexity(benchmark::oNSquared);

static void BM_BlaschkeProduct(benchmark::State& state) {
    const std::vector<complex> zeros{0.5, complex(0.0, -0.4), complex(0.3, 0.6)};
    for (auto _ : state) benchmark::DoNotOptimize(blaschke_product(zeros, static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_BlaschkeProduct)->Arg(1 << 17);

static void BM_BoxTest(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(box_test(Measure::dyadic_atoms(0.5), 1.0));
}
BENCHMARK(BM_BoxTest);

static void BM_IntegralTestComplex(benchmark::State& state) {
    const Measure mu = Measure::power_density(-0.5);
    for (auto _ : state)
        benchmark::DoNotOptimize(integral_test_complex(mu, 0.5, 1.0, 0.25, 12, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_IntegralTestComplex)->Arg(16)->Arg(256)->Unit(benchmark::kMillisecond);

static void BM_IsSCarleson(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(is_s_carleson(Measure::lebesgue(), 1.0));
}
BENCHMARK(BM_IsSCarleson)->Unit(benchmark::kMillisecond);

static void BM_BlochSeminorm(benchmark::State& state) {
    const PowerSeries g = cesaro_mu(blaschke_factor(0.5, 4096), Measure::lebesgue(), 4096);
    for (auto _ : state) benchmark::DoNotOptimize(bloch_seminorm(g));
}
BENCHMARK(BM_BlochSeminorm)->Unit(benchmark::kMillisecond);

static void BM_QpSeminorm(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const PowerSeries g = cesaro_mu(blaschke_factor(0.5, n), Measure::lebesgue(), n);
    for (auto _ : state) benchmark::DoNotOptimize(qp_seminorm(g, 1.0));
}
BENCHMARK(BM_QpSeminorm)->Arg(4096)->Arg(1 << 14)->Unit(benchmark::kMillisecond);

static void BM_HinfNorm(benchmark::State& state) {
    const PowerSeries f = blaschke_product({0.5, complex(0.0, -0.4), complex(0.3, 0.6)}, 1 << 17);
    for (auto _ : state) benchmark::DoNotOptimize(hinf_norm(f));
}
BENCHMARK(BM_HinfNorm);

static void BM_TwoKernelCheck(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(two_kernel_check(0.99, 0.99, 0.0, 1.5, 1.5));
}
BENCHMARK(BM_TwoKernelCheck)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
