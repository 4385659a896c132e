#include <benchmark/benchmark.h>

#include <random>

#include "critlib/intlinalg.hpp"
#include "critlib/rootsys.hpp"

using namespace critlib;

static IntMatrix random_matrix(std::size_t n, unsigned seed) {
    std::mt19937 gen(seed);
    std::uniform_int_distribution<long> d(-20, 20);
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = d(gen);
    return m;
}

static void BM_SmithRandom(benchmark::State& state) {
    auto m = random_matrix(static_cast<std::size_t>(state.range(0)), 1);
    for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(m));
}
BENCHMARK(BM_SmithRandom)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

static void BM_DeterminantRandom(benchmark::State& state) {
    auto m = random_matrix(static_cast<std::size_t>(state.range(0)), 2);
    for (auto _ : state) benchmark::DoNotOptimize(determinant(m));
}
BENCHMARK(BM_DeterminantRandom)->Arg(4)->Arg(8)->Arg(16)->Arg(32)->Arg(64);

static void BM_CokernelE8(benchmark::State& state) {
    auto c = cartan_matrix(DynkinType::parse("E8")).transpose();
    for (auto _ : state) benchmark::DoNotOptimize(cokernel_invariants(c));
}
BENCHMARK(BM_CokernelE8);

BENCHMARK_MAIN();
