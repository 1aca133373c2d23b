#include <benchmark/benchmark.h>

#include "mpv/kernel.hpp"
#include "mpv/reductions.hpp"
#include "mpv/solvers.hpp"

using namespace mpv;

namespace {

void report(benchmark::State& state, const SolveReport& r)
{
    state.counters["states"] = double(r.stats.states);
    state.counters["yes"] = r.answer ? 1 : 0;
}

void BM_LayeredK(benchmark::State& state)
{
    auto instance = random_instance(100, std::size_t(state.range(0)), 10, 1, 2, 1,
                                    Variant::revolutionary, 0.0, 91);
    SolveReport r;
    for (auto _ : state)
        benchmark::DoNotOptimize(r = solve_layered_k(instance));
    report(state, r);
}
BENCHMARK(BM_LayeredK)->Arg(100)->Arg(1000)->Arg(10'000)->Unit(benchmark::kMillisecond);

void BM_DpTau(benchmark::State& state)
{
    auto instance = random_instance(50, 1000, std::size_t(state.range(0)), 5, 2, 8,
                                    Variant::revolutionary, 0.0, 92);
    SolveReport r;
    for (auto _ : state)
        benchmark::DoNotOptimize(r = solve_dp_tau(instance));
    report(state, r);
}
BENCHMARK(BM_DpTau)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_InOutEll(benchmark::State& state)
{
    auto instance = random_instance(100, std::size_t(state.range(0)), 50, 3, 1, 8,
                                    Variant::revolutionary, 0.0, 93);
    SolveReport r;
    for (auto _ : state)
        benchmark::DoNotOptimize(r = solve_inout_ell(instance));
    report(state, r);
}
BENCHMARK(BM_InOutEll)->Arg(10)->Arg(50)->Unit(benchmark::kMillisecond);

void BM_Auto(benchmark::State& state)
{
    auto instance = random_instance(20, 40, 6, 2, 1, 4, Variant::conservative, 0.1, 94);
    SolveReport r;
    for (auto _ : state)
        benchmark::DoNotOptimize(r = solve_auto(instance));
    report(state, r);
    state.SetLabel(r.algorithm);
}
BENCHMARK(BM_Auto)->Unit(benchmark::kMillisecond);

void BM_Sidon(benchmark::State& state)
{
    for (auto _ : state)
        benchmark::DoNotOptimize(sidon(std::uint64_t(state.range(0))));
}
BENCHMARK(BM_Sidon)->Arg(1000)->Arg(1'000'000)->Unit(benchmark::kMillisecond);

void BM_ShrinkWeights(benchmark::State& state)
{
    const auto d = std::size_t(state.range(0));
    std::vector<BigInt> w;
    for (std::size_t i = 0; i < d; ++i)
        w.push_back(BigInt(1'000'003) * BigInt(i + 7) * BigInt(998'244'353));
    for (auto _ : state)
        benchmark::DoNotOptimize(shrink_weights(w, 3));
}
BENCHMARK(BM_ShrinkWeights)->DenseRange(2, 6, 2)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
