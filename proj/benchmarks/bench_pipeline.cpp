#include <benchmark/benchmark.h>

#include "meyniel/app.hpp"
#include "meyniel/clique.hpp"
#include "meyniel/generate.hpp"
#include "meyniel/lexcolor.hpp"

using namespace meyniel;

namespace {

Graph half_dense(int n) { return generate({Family::gnp, n, 0.5, 42, {}}); }

template <Strategy S>
void BM_LexColor(benchmark::State& state)
{
    const Graph g = half_dense(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(lex_color(g, {}, S));
    state.SetComplexityN(state.range(0));
}

void BM_ColorAndClique(benchmark::State& state)
{
    const Graph g = half_dense(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        ColorTrace t = lex_color(g);
        benchmark::DoNotOptimize(greedy_clique(g, t));
    }
    state.SetComplexityN(state.range(0));
}

void BM_RobustSolve(benchmark::State& state)
{
    const Graph g = half_dense(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(robust_solve(g));
    state.SetComplexityN(state.range(0));
}

void BM_RobustSolveChordal(benchmark::State& state)
{
    const Graph g = generate({Family::chordal, static_cast<int>(state.range(0)), 0.5, 42, {}});
    for (auto _ : state)
        benchmark::DoNotOptimize(robust_solve(g));
    state.SetComplexityN(state.range(0));
}

void BM_StableSet(benchmark::State& state)
{
    const Graph g = generate({Family::chordal, static_cast<int>(state.range(0)), 0.5, 42, {}});
    for (auto _ : state)
        benchmark::DoNotOptimize(robust_stable_set(g, 0));
    state.SetComplexityN(state.range(0));
}

void Doubling(benchmark::internal::Benchmark* b)
{
    for (int n : {250, 500, 1000, 2000})
        b->Arg(n);
}

} // namespace

BENCHMARK(BM_LexColor<Strategy::naive>)->RangeMultiplier(2)->Range(64, 512)->Complexity()->Unit(benchmark::kMillisecond);
BENCHMARK(BM_LexColor<Strategy::refined>)->RangeMultiplier(2)->Range(64, 2048)->Complexity(benchmark::oNSquared)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ColorAndClique)->Apply(Doubling)->Complexity(benchmark::oNSquared)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RobustSolve)->Apply(Doubling)->Complexity()->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RobustSolveChordal)->Apply(Doubling)->Complexity()->Unit(benchmark::kMillisecond);
BENCHMARK(BM_StableSet)->RangeMultiplier(2)->Range(64, 512)->Complexity(benchmark::oNCubed)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
