#include <benchmark/benchmark.h>

#include "hicm/diffusion.hpp"
#include "hicm/generators.hpp"
#include "hicm/metrics.hpp"
#include "hicm/rng.hpp"

using namespace hicm;

namespace {

Graph make_graph(int n) { return generate_ba(n, 7, 12); }

void BM_FillDraws(benchmark::State& state) {
  Graph g = make_graph(static_cast<int>(state.range(0)));
  EdgeDraws draws;
  std::uint64_t seed = 0;
  for (auto _ : state) {
    fill_draws(g, seed++, draws);
    benchmark::DoNotOptimize(draws.values.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(g.directed_edge_count()));
}
BENCHMARK(BM_FillDraws)->Arg(1000)->Arg(10000);

void BM_RunSingleStage(benchmark::State& state) {
  Graph g = make_graph(static_cast<int>(state.range(0)));
  DiffusionConfig cfg;
  cfg.propagation_probability = 0.05;
  cfg.seed_fraction = 0.02;
  cfg.habituation_enabled = state.range(1) != 0;
  cfg.habituation_params = HabituationParams(1.05, 1.0);
  auto ranking = rank_nodes(g, Ranking::Degree, 0);
  Simulator sim(g);
  EdgeDraws draws;
  std::uint64_t run = 0;
  for (auto _ : state) {
    fill_draws(g, derive_seed(1, 0, run++), draws);
    benchmark::DoNotOptimize(sim.run(cfg, draws, ranking).coverage);
  }
}
BENCHMARK(BM_RunSingleStage)->Args({1000, 0})->Args({1000, 1})->Args({10000, 0});

void BM_RunSequentialHabituated(benchmark::State& state) {
  Graph g = make_graph(static_cast<int>(state.range(0)));
  DiffusionConfig cfg;
  cfg.propagation_probability = 0.05;
  cfg.seed_fraction = 0.02;
  cfg.seeding = Seeding::Sequential;
  cfg.habituation_enabled = true;
  cfg.habituation_params = HabituationParams(1.05, 1.0);
  auto ranking = rank_nodes(g, Ranking::Degree, 0);
  Simulator sim(g);
  EdgeDraws draws;
  std::uint64_t run = 0;
  for (auto _ : state) {
    fill_draws(g, derive_seed(2, 0, run++), draws);
    benchmark::DoNotOptimize(sim.run(cfg, draws, ranking).coverage);
  }
}
BENCHMARK(BM_RunSequentialHabituated)->Arg(1000)->Arg(10000);

void BM_GenerateBA(benchmark::State& state) {
  std::uint64_t seed = 0;
  for (auto _ : state) {
    Graph g = generate_ba(static_cast<int>(state.range(0)), 7, seed++);
    benchmark::DoNotOptimize(g.edge_count());
  }
}
BENCHMARK(BM_GenerateBA)->Arg(1000)->Arg(10000);

void BM_GraphMetrics(benchmark::State& state) {
  Graph g = make_graph(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    GraphMetrics m = graph_metrics(g);
    benchmark::DoNotOptimize(m.mean_eigenvector_centrality);
  }
}
BENCHMARK(BM_GraphMetrics)->Arg(1000);

}  // namespace

BENCHMARK_MAIN();
