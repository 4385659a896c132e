#include <benchmark/benchmark.h>

#include "critlib/chipfire.hpp"
#include "critlib/rootsys.hpp"

using namespace critlib;

static void BM_StabilizeA(benchmark::State& state, FiringStrategy strategy) {
    const int n = static_cast<int>(state.range(0));
    auto sys = ChipSystem::certify(cartan_matrix(DynkinType{'A', n}));
    IntVector v(static_cast<std::size_t>(n), Integer(0));
    v[0] = 50 * n;
    for (auto _ : state) benchmark::DoNotOptimize(sys.stabilize(v, strategy));
}
BENCHMARK_CAPTURE(BM_StabilizeA, queue, FiringStrategy::Queue)->Arg(8)->Arg(16)->Arg(32);
BENCHMARK_CAPTURE(BM_StabilizeA, max_surplus, FiringStrategy::MaxSurplus)->Arg(8)->Arg(16)->Arg(32);

static void BM_RecurrentsD(benchmark::State& state) {
    auto sys = ChipSystem::certify(cartan_matrix(DynkinType{'D', static_cast<int>(state.range(0))}));
    for (auto _ : state) benchmark::DoNotOptimize(sys.recurrent_representatives());
}
BENCHMARK(BM_RecurrentsD)->Arg(4)->Arg(8)->Arg(12);

static void BM_VerifyE7(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(verify_theorem_1_1(DynkinType::parse("E7")));
}
BENCHMARK(BM_VerifyE7);

BENCHMARK_MAIN();
