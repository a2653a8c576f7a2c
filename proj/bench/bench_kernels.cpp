#include <benchmark/benchmark.h>

#include "pegging/solvers.hpp"
#include "pegging/weights.hpp"

using namespace peg;

namespace {

void summed_weights(benchmark::State& state, bool parallel) {
    const Graph g = build_family(ArySpec{2, static_cast<std::size_t>(state.range(0))}).graph;
    const auto targets = leaves(g);
    for (auto _ : state) {
        auto w = parallel ? summed_weights_all(g, targets) : summed_weights_all_serial(g, targets);
        benchmark::DoNotOptimize(w);
    }
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * targets.size() * g.vertex_count()));
}

void BM_SummedWeightsParallel(benchmark::State& state) { summed_weights(state, true); }
void BM_SummedWeightsSerial(benchmark::State& state) { summed_weights(state, false); }

void optimal(benchmark::State& state, Execution exec) {
    const Graph g = build_family(PathSpec{static_cast<std::size_t>(state.range(0))}).graph;
    for (auto _ : state) {
        auto r = optimal_pegging_number(g, {}, exec);
        benchmark::DoNotOptimize(r);
    }
}

void BM_OptimalPeggingParallel(benchmark::State& state) { optimal(state, Execution::parallel); }
void BM_OptimalPeggingSerial(benchmark::State& state) { optimal(state, Execution::serial); }

}  // namespace

BENCHMARK(BM_SummedWeightsParallel)->Arg(8)->Arg(10)->Arg(12)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SummedWeightsSerial)->Arg(8)->Arg(10)->Arg(12)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_OptimalPeggingParallel)->Arg(9)->Arg(13)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_OptimalPeggingSerial)->Arg(9)->Arg(13)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
