#include <benchmark/benchmark.h>

#include "fixtures.hpp"
#include "hreg/constructions.hpp"
#include "hreg/oracles.hpp"
#include "hreg/regsearch.hpp"
#include "hreg/regularize.hpp"
#include "hreg/rregsearch.hpp"
#include "hreg/smallreg.hpp"

using namespace hreg;
using namespace hreg::testing;

static void BM_EvenNullspace(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  auto g = random_simple(n, 3, n + 1, 7);
  for (auto _ : state) benchmark::DoNotOptimize(find_even_subhypergraph(g));
}
BENCHMARK(BM_EvenNullspace)->Arg(30)->Arg(100)->Arg(300);

static void BM_ExactOracle(benchmark::State& state) {
  auto g = random_linear3(12, static_cast<int>(state.range(0)), 3);
  for (auto _ : state)
    benchmark::DoNotOptimize(find_r_regular_exact(g, 2, OracleBudget{}));
}
BENCHMARK(BM_ExactOracle)->Arg(10)->Arg(14);

static void BM_StsGeneration(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(gen_sts(n, 5));
}
BENCHMARK(BM_StsGeneration)->Arg(9)->Arg(63)->Arg(255);

static void BM_HomCount(benchmark::State& state) {
  auto sts = gen_sts(13, 2);
  auto view = tripartite_view(sts, 1, 0);
  Graph g = view ? view->graph.as_graph() : Graph{};
  for (auto _ : state)
    benchmark::DoNotOptimize(hom_cycle_count(g, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_HomCount)->Arg(2)->Arg(4);

static void BM_CollisionSts9(benchmark::State& state) {
  auto sts = gen_sts(9, 42);
  for (auto _ : state) {
    SearchParams params;
    params.seed = 11;
    params.sample_budget = 1'000'000;
    benchmark::DoNotOptimize(detect_two_regular(sts, Strategy::Matchings, params, 40));
  }
}
BENCHMARK(BM_CollisionSts9);

static void BM_SunflowerSts9(benchmark::State& state) {
  auto sts = gen_sts(9, 42);
  for (auto _ : state) {
    RRegParams params;
    params.seed = 3;
    params.matching_budget = 100'000;
    benchmark::DoNotOptimize(find_r_regular_sunflower(sts, 2, params));
  }
}
BENCHMARK(BM_SunflowerSts9);

static void BM_ConstrainedCycle(benchmark::State& state) {
  auto g = planted_double_cycle(2, 60, 24, 120, 5);
  for (auto _ : state)
    benchmark::DoNotOptimize(find_constrained_cycle(g, 4, 1'000'000, 9));
}
BENCHMARK(BM_ConstrainedCycle);

BENCHMARK_MAIN();
