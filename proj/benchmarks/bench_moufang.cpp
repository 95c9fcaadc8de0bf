#include <benchmark/benchmark.h>

#include <vector>

#include "moufang/derivatives.hpp"
#include "moufang/residuals.hpp"
#include "moufang/suite.hpp"
#include "moufang/tensors.hpp"

namespace {

const std::vector<double> kG{0.1, -0.05, 0.02, 0.07, 0.0, -0.03, 0.04};
const std::vector<double> kH{-0.02, 0.06, 0.01, -0.04, 0.05, 0.0, 0.03};

void BM_Multiply(benchmark::State& state) {
  const auto loop = moufang::builtin("octonion");
  for (auto _ : state)
    benchmark::DoNotOptimize(loop->multiply(std::span<const double>(kG), std::span<const double>(kH)));
}
BENCHMARK(BM_Multiply);

void BM_CrossJet(benchmark::State& state) {
  const auto loop = moufang::builtin("octonion");
  for (auto _ : state) benchmark::DoNotOptimize(moufang::cross_jet(*loop, kG, kH));
}
BENCHMARK(BM_CrossJet);

void BM_PointTensors(benchmark::State& state) {
  const auto loop = moufang::builtin("octonion");
  for (auto _ : state) benchmark::DoNotOptimize(moufang::point_tensors(*loop, kG));
}
BENCHMARK(BM_PointTensors);

void BM_PairTensors(benchmark::State& state) {
  const auto loop = moufang::builtin("octonion");
  for (auto _ : state) benchmark::DoNotOptimize(moufang::pair_tensors(*loop, kG, kH));
}
BENCHMARK(BM_PairTensors);

void BM_RunSuite(benchmark::State& state) {
  const moufang::SamplePlan plan{42, static_cast<std::size_t>(state.range(0)), 0.2, "octonion"};
  const auto families = moufang::all_families();
  const moufang::SuiteOptions options{1e-9, {}, static_cast<unsigned>(state.range(1))};
  for (auto _ : state) benchmark::DoNotOptimize(moufang::run_suite(plan, families, options));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_RunSuite)->Args({50, 1})->Args({50, 4})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
