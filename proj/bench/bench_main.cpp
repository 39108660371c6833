#include "vstab/constructions.hpp"
#include "vstab/critical.hpp"
#include "vstab/random.hpp"
#include "vstab/sat.hpp"
#include "vstab/stability.hpp"

#include <benchmark/benchmark.h>

using namespace vstab;

namespace {

Execution mode(const benchmark::State& state)
{
    return state.range(0) == 0 ? Execution::serial : Execution::parallel;
}

void BM_Stability(benchmark::State& state)
{
    const Graph g = construct_prop31(9, 2).graph;
    StabilityOptions o;
    o.execution = mode(state);
    for (auto _ : state)
        benchmark::DoNotOptimize(stability(g, Parameter::chi, o));
}
BENCHMARK(BM_Stability)->Arg(0)->Arg(1)->ArgName("parallel")->Unit(benchmark::kMillisecond);

void BM_StabilityRandom(benchmark::State& state)
{
    Rng rng(7);
    std::vector<Graph> corpus;
    for (int i = 0; i < 20; ++i)
        corpus.push_back(random_graph(14, 0.5, rng));
    StabilityOptions o;
    o.execution = mode(state);
    for (auto _ : state)
        for (const auto& g : corpus)
            benchmark::DoNotOptimize(stability(g, Parameter::omega, o));
}
BENCHMARK(BM_StabilityRandom)->Arg(0)->Arg(1)->ArgName("parallel")->Unit(benchmark::kMillisecond);

void BM_BruteForceSat(benchmark::State& state)
{
    // Both polarities of a 22-variable chain clause: unsatisfiable only at the last block.
    Rng rng(3);
    CnfInstance inst = random_cnf(22, 200, 3, rng);
    const Execution exec = mode(state);
    for (auto _ : state)
        benchmark::DoNotOptimize(is_satisfiable(inst, exec));
}
BENCHMARK(BM_BruteForceSat)->Arg(0)->Arg(1)->ArgName("parallel")->Unit(benchmark::kMillisecond);

void BM_CriticalEnumeration(benchmark::State& state)
{
    Rng rng(11);
    const Graph g = random_graph(16, 0.45, rng);
    const Execution exec = mode(state);
    for (auto _ : state)
        benchmark::DoNotOptimize(enumerate_critical_subgraphs(g, 16, exec));
}
BENCHMARK(BM_CriticalEnumeration)->Arg(0)->Arg(1)->ArgName("parallel")->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
