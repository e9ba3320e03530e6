#include <benchmark/benchmark.h>

#include "raagprobe/detectors.hpp"
#include "raagprobe/formulas.hpp"
#include "raagprobe/graph.hpp"
#include "raagprobe/sampler.hpp"

namespace {

using namespace raagprobe;

void BM_SampleDense(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    std::uint64_t trial = 0;
    for (auto _ : state) {
        Graph g = sample_gnp_dense(n, 0.5, derive_stream(1, trial++));
        benchmark::DoNotOptimize(g.edge_count());
    }
    state.SetItemsProcessed(state.iterations() * (n * (n - 1) / 2));
}
BENCHMARK(BM_SampleDense)->Arg(64)->Arg(256)->Arg(1024);

void BM_SampleSkip(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const double p = 0.01;
    std::uint64_t trial = 0;
    for (auto _ : state) {
        Graph g = sample_gnp_skip(n, p, derive_stream(2, trial++));
        benchmark::DoNotOptimize(g.edge_count());
    }
    state.SetItemsProcessed(state.iterations() * (n * (n - 1) / 2));
}
BENCHMARK(BM_SampleSkip)->Arg(64)->Arg(256)->Arg(1024);

void BM_DominationCount(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    Graph g = sample_gnp(n, 0.5, derive_stream(3, 0));
    for (auto _ : state) {
        DominationCounts counts = count_domination_pairs(g);
        benchmark::DoNotOptimize(counts.total());
    }
    state.SetItemsProcessed(state.iterations() * n * (n - 1));
}
BENCHMARK(BM_DominationCount)->Arg(64)->Arg(256)->Arg(1024);

void BM_StarCutScan(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    Graph g = sample_gnp(n, 0.2, derive_stream(4, 0));
    for (auto _ : state) {
        VertexSet cuts = star_cut_vertices(g);
        benchmark::DoNotOptimize(cuts.count());
    }
}
BENCHMARK(BM_StarCutScan)->Arg(64)->Arg(256);

void BM_SeparationCount(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    Graph g = sample_gnp(n, threshold(n), derive_stream(5, 0));
    for (auto _ : state) {
        double count = proper_star_k_separation_count(g, 1);
        benchmark::DoNotOptimize(count);
    }
}
BENCHMARK(BM_SeparationCount)->Arg(64)->Arg(256);

void BM_FinitenessVerdict(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    std::uint64_t trial = 0;
    for (auto _ : state) {
        Graph g = sample_gnp(n, 0.5, derive_stream(6, trial++));
        FinitenessVerdict verdict = finiteness_verdict(g);
        benchmark::DoNotOptimize(verdict.label);
    }
}
BENCHMARK(BM_FinitenessVerdict)->Arg(64)->Arg(128)->Arg(256);

void BM_SeparationExpectation(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    int k = 1;
    for (auto _ : state) {
        double value = expected_proper_star_k_separations(n, threshold(n), 1 + (k++ % (n / 2)));
        benchmark::DoNotOptimize(value);
    }
}
BENCHMARK(BM_SeparationExpectation)->Arg(100)->Arg(10000);

}  // namespace

BENCHMARK_MAIN();
