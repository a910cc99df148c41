#include <benchmark/benchmark.h>

#include "sampeng/sampeng.hpp"

using namespace sampeng;

namespace {

constexpr std::size_t kNodes = 2700;

Graph er_graph(double k) { return er_digraph({kNodes, k, 1}); }
GraphSignal er_signal() { return uniform_signal(kNodes, 0.01, 0.10, 1 + kSignalSeedOffset); }

}  // namespace

// Args: K, max hop.
static void BM_HopStructure(benchmark::State& state) {
    const Graph g = er_graph(static_cast<double>(state.range(0)));
    const auto hops = static_cast<std::size_t>(state.range(1));
    for (auto _ : state) benchmark::DoNotOptimize(HopStructure(g, hops));
}
BENCHMARK(BM_HopStructure)->ArgsProduct({{3, 10}, {1, 2, 3}})->Unit(benchmark::kMillisecond);

// Args: K, m, kernel (0 pairwise, 1 sorted window).
static void BM_MatchCounts(benchmark::State& state) {
    const auto m = static_cast<std::size_t>(state.range(1));
    const Graph g = er_graph(static_cast<double>(state.range(0)));
    const GraphSignal s = er_signal();
    const HopStructure hops(g, m);
    const EmbeddingSet emb = build_embeddings(hops, s, m);
    const auto params = SampEnParams::from_signal(s.values(), m, 0.2);
    const MatchOptions opts{state.range(2) == 0 ? MatchKernel::pairwise_scan : MatchKernel::sorted_window, false};
    for (auto _ : state) benchmark::DoNotOptimize(match_counts(emb, params, opts));
}
BENCHMARK(BM_MatchCounts)->ArgsProduct({{3, 10}, {1, 3}, {0, 1}})->Unit(benchmark::kMillisecond);

// End-to-end per-realisation cost at the ER experiment's size. Args: K, m.
static void BM_SampEnGraphER(benchmark::State& state) {
    const Graph g = er_graph(static_cast<double>(state.range(0)));
    const GraphSignal s = er_signal();
    const auto m = static_cast<std::size_t>(state.range(1));
    for (auto _ : state) benchmark::DoNotOptimize(sampen_graph(g, s, m, 0.2));
}
BENCHMARK(BM_SampEnGraphER)->ArgsProduct({{3, 10, 12}, {1, 2, 3}})->Unit(benchmark::kMillisecond);

static void BM_ClassicalSampEn(benchmark::State& state) {
    const auto x = logistic_series({3.9, static_cast<std::size_t>(state.range(0)), 0.4, 1000});
    for (auto _ : state) benchmark::DoNotOptimize(classical_sampen(x, 2, 0.2));
}
BENCHMARK(BM_ClassicalSampEn)->Arg(1000)->Arg(2000)->Arg(4000)->Unit(benchmark::kMillisecond);

static void BM_ERGenerator(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(er_graph(static_cast<double>(state.range(0))));
}
BENCHMARK(BM_ERGenerator)->Arg(5)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
