#include <benchmark/benchmark.h>

#include "cyclequiv/cmag.hpp"
#include "cyclequiv/cpag.hpp"
#include "cyclequiv/randgraph.hpp"
#include "cyclequiv/reachability.hpp"

namespace {

using namespace cyclequiv;

DirectedGraph bench_graph(int n) {
    GenParams p;
    p.n = n;
    p.d = 3.0;
    p.p_two = 0.2;
    p.p_acy = 0.7;
    p.p_cyc = 0.1;
    p.seed = 42;
    p.convention = BudgetConvention::Half;
    return generate(p);
}

void bm_ancestry(benchmark::State& state) {
    const auto g = bench_graph(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(compute_ancestry(g));
}

void bm_cmag(benchmark::State& state) {
    const auto g = bench_graph(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(build_cmag(g));
}

void bm_cpag(benchmark::State& state) {
    const auto g = bench_graph(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(build_cpag(g));
    state.SetComplexityN(state.range(0));
}

}  // namespace

BENCHMARK(bm_ancestry)->RangeMultiplier(2)->Range(25, 200);
BENCHMARK(bm_cmag)->RangeMultiplier(2)->Range(25, 200);
BENCHMARK(bm_cpag)->RangeMultiplier(2)->Range(25, 200)->Complexity();
BENCHMARK_MAIN();
