#include "orbgw/hodge.hpp"
#include "orbgw/lambda_algebra.hpp"
#include "orbgw/mirror.hpp"
#include "orbgw/picard_fuchs.hpp"
#include "orbgw/series.hpp"

#include <benchmark/benchmark.h>

#include <random>

namespace {

orbgw::Series random_series(int order, bool zero_const) {
    std::mt19937 rng(42);
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 9);
    std::vector<orbgw::Rational> c(static_cast<size_t>(order) + 1);
    for (auto& v : c) v = orbgw::Rational(num(rng), den(rng));
    if (zero_const) {
        c[0] = 0;
        c[1] = 1;
    }
    return orbgw::Series("x", std::move(c));
}

void BM_bk_series(benchmark::State& state) {
    const int order = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(orbgw::bk_series(1, order));
    }
}
BENCHMARK(BM_bk_series)->Arg(60)->Arg(120);

void BM_series_mul(benchmark::State& state) {
    const int order = static_cast<int>(state.range(0));
    orbgw::Series f = random_series(order, false);
    orbgw::Series g = random_series(order, false);
    for (auto _ : state) {
        benchmark::DoNotOptimize(orbgw::mul(f, g));
    }
}
BENCHMARK(BM_series_mul)->Arg(30)->Arg(60);

void BM_series_revert(benchmark::State& state) {
    const int order = static_cast<int>(state.range(0));
    orbgw::Series f = random_series(order, true);
    for (auto _ : state) {
        benchmark::DoNotOptimize(orbgw::revert(f));
    }
}
BENCHMARK(BM_series_revert)->Arg(30)->Arg(60);

void BM_genus0_invariants(benchmark::State& state) {
    const int order = static_cast<int>(state.range(0));
    for (auto _ : state) {
        orbgw::MirrorFrame frame = orbgw::make_mirror_frame(order);
        benchmark::DoNotOptimize(orbgw::genus0_invariants(frame, order / 3));
    }
}
BENCHMARK(BM_genus0_invariants)->Arg(30)->Arg(60);

void BM_disc_reduction(benchmark::State& state) {
    const int g = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(orbgw::disc_integrand_reduction(g));
    }
}
BENCHMARK(BM_disc_reduction)->Arg(3)->Arg(5)->Arg(6);

void BM_gmumford_cube_membership(benchmark::State& state) {
    const int g = static_cast<int>(state.range(0));
    orbgw::LambdaPoly cube = orbgw::LambdaPoly::term(
        orbgw::LambdaMonomial({{orbgw::Generator{orbgw::GeneratorFamily::omega, g - 1}, 3}}), 1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            orbgw::is_zero_in_quotient(cube, orbgw::g_mumford_relations(g)));
    }
}
BENCHMARK(BM_gmumford_cube_membership)->Arg(3)->Arg(4);

}  // namespace

BENCHMARK_MAIN();
