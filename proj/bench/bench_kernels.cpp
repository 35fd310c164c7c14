// Serial reference vs OpenMP kernel for each parallel entry point.

#include "conevol/functionals.hpp"
#include "conevol/inequalities.hpp"
#include "conevol/optimizer.hpp"
#include "conevol/shapes.hpp"

#include <benchmark/benchmark.h>

using namespace conevol;

namespace {

const Polytope& bench_hull() {
  static const Polytope q = random_inscribed(3, 60, 7);
  return q;
}

std::vector<NamedPolytope> bench_shapes() {
  std::vector<NamedPolytope> out;
  for (int i = 0; i < 40; ++i) {
    auto spec = ShapeSpec::random_inscribed(3, 4 + i % 20, 900 + i);
    out.push_back({spec.name(), generate(spec)});
  }
  return out;
}

void BM_MeanWidthSerial(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(mean_width_monte_carlo_serial(bench_hull(), static_cast<std::uint64_t>(state.range(0)), 1));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_MeanWidthParallel(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(mean_width_monte_carlo(bench_hull(), static_cast<std::uint64_t>(state.range(0)), 1));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_SuiteSerial(benchmark::State& state) {
  const auto shapes = bench_shapes();
  const auto weights = registry_weights();
  for (auto _ : state) benchmark::DoNotOptimize(run_suite_serial(shapes, weights));
}

void BM_SuiteParallel(benchmark::State& state) {
  const auto shapes = bench_shapes();
  const auto weights = registry_weights();
  for (auto _ : state) benchmark::DoNotOptimize(run_suite(shapes, weights));
}

OptimizerConfig bench_config() {
  OptimizerConfig cfg;
  cfg.seed = 1;
  cfg.restarts = 8;
  return cfg;
}

void BM_OptimizeSerial(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(optimize_serial(static_cast<int>(state.range(0)), Objective::volume(), bench_config()));
}

void BM_OptimizeParallel(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(optimize(static_cast<int>(state.range(0)), Objective::volume(), bench_config()));
}

}  // namespace

BENCHMARK(BM_MeanWidthSerial)->Arg(100000)->Arg(1000000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MeanWidthParallel)->Arg(100000)->Arg(1000000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SuiteSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SuiteParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_OptimizeSerial)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_OptimizeParallel)->Arg(5)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
