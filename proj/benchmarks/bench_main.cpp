#include <benchmark/benchmark.h>

#include "boxkit/bounds.hpp"
#include "boxkit/exactbox.hpp"
#include "boxkit/graph.hpp"
#include "boxkit/intervals.hpp"
#include "boxkit/profile.hpp"

using namespace boxkit;

static void BM_KneserGen(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(kneser_graph({2, n}));
}
BENCHMARK(BM_KneserGen)->Arg(8)->Arg(12)->Arg(16);

static void BM_BuildUpperCover(benchmark::State& state) {
    int k = static_cast<int>(state.range(0));
    int n = static_cast<int>(state.range(1));
    for (auto _ : state) benchmark::DoNotOptimize(build_upper_cover({k, n}));
}
BENCHMARK(BM_BuildUpperCover)->Args({2, 12})->Args({3, 12})->Args({4, 12});

static void BM_VerifyCover(benchmark::State& state) {
    int k = static_cast<int>(state.range(0));
    int n = static_cast<int>(state.range(1));
    Graph g = kneser_graph({k, n});
    Cover c = build_upper_cover({k, n});
    for (auto _ : state) benchmark::DoNotOptimize(verify_cover(g, c));
}
BENCHMARK(BM_VerifyCover)->Args({2, 12})->Args({4, 12});

static void BM_CompleteProfile(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    Graph g = complement(kneser_graph({2, n}));
    ProfileLimits limits;
    limits.max_vertices = 70;
    for (auto _ : state) benchmark::DoNotOptimize(complete_profile(g, limits));
}
BENCHMARK(BM_CompleteProfile)->Arg(7)->Arg(8)->Arg(9);

static void BM_MaxBalancedBiclique(benchmark::State& state) {
    Graph g = complement(kneser_graph({2, 9}));
    for (auto _ : state) benchmark::DoNotOptimize(max_balanced_biclique(g));
}
BENCHMARK(BM_MaxBalancedBiclique);

static void BM_DecidePetersenYes3(benchmark::State& state) {
    Graph pet = petersen_graph();
    for (auto _ : state) benchmark::DoNotOptimize(decide_boxicity_leq(pet, 3));
}
BENCHMARK(BM_DecidePetersenYes3);

static void BM_DecideC7ComplementNo2(benchmark::State& state) {
    Graph h = complement(line_graph(cycle_graph(7)));
    for (auto _ : state) benchmark::DoNotOptimize(decide_boxicity_leq(h, 2));
}
BENCHMARK(BM_DecideC7ComplementNo2);

static void BM_BoundReportKneser(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(bound_report(KneserParams{2, 100}));
}
BENCHMARK(BM_BoundReportKneser);

BENCHMARK_MAIN();
