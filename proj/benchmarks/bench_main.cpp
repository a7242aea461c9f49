#include <benchmark/benchmark.h>

#include <random>

#include "trsmlab/classifier.hpp"
#include "trsmlab/kernel.hpp"
#include "trsmlab/simulator.hpp"
#include "trsmlab/sweep.hpp"

using namespace trsmlab;

static void BM_ClassifyRatio(benchmark::State& state) {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> logr(-16, 16);
  std::vector<double> ratios(4096);
  for (auto& r : ratios) r = std::exp2(logr(rng));
  std::size_t i = 0;
  for (auto _ : state) {
    auto c = classify_ratio(ratios[i++ & 4095], 64, RuleSet::Original);
    benchmark::DoNotOptimize(c.is_gap);
  }
}
BENCHMARK(BM_ClassifyRatio);

static void BM_TrsmCost(benchmark::State& state) {
  const std::uint64_t n = std::uint64_t{1} << state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(trsm_cost({n, 256, 64, 1}, CommModel::Pairwise));
}
BENCHMARK(BM_TrsmCost)->DenseRange(8, 20, 4);

static void BM_ExpandTree(benchmark::State& state) {
  const std::uint64_t n = std::uint64_t{1} << state.range(0);
  for (auto _ : state) {
    auto tree = expand_tree({n, 64, 16, 1}, CommModel::Pairwise);
    benchmark::DoNotOptimize(fold(tree));
  }
}
BENCHMARK(BM_ExpandTree)->DenseRange(4, 10, 2);

static void BM_SolveForward(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  auto sys = make_test_system(n, 64, 3);
  for (auto _ : state) benchmark::DoNotOptimize(solve_forward(sys.L, sys.B));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n * n * 64));
}
BENCHMARK(BM_SolveForward)->RangeMultiplier(4)->Range(16, 1024);

static void BM_SolveRecursive(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  auto sys = make_test_system(n, 64, 3);
  for (auto _ : state) benchmark::DoNotOptimize(solve_recursive(sys.L, sys.B, 16));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n * n * 64));
}
BENCHMARK(BM_SolveRecursive)->RangeMultiplier(4)->Range(16, 1024);

static void BM_Sweep(benchmark::State& state) {
  SweepOptions opt;
  opt.samples = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(run_sweep(opt));
}
BENCHMARK(BM_Sweep)->Arg(256)->Arg(4096);
BENCHMARK_MAIN();
