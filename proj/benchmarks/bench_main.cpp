#include <benchmark/benchmark.h>

#include "framechoice/fluce.hpp"
#include "framechoice/frum.hpp"
#include "framechoice/polys.hpp"
#include "framechoice/sim.hpp"

namespace fc = framechoice;

static void BM_ComputeBm(benchmark::State& state) {
  fc::SimConfig config;
  config.seed = 1;
  config.n = static_cast<int>(state.range(0));
  const auto data = fc::sample_arbitrary<double>(config);
  for (auto _ : state) benchmark::DoNotOptimize(fc::compute_bm(data));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ComputeBm)->DenseRange(10, 16, 2)->Unit(benchmark::kMillisecond);

static void BM_ComputeBmRational(benchmark::State& state) {
  fc::SimConfig config;
  config.n = static_cast<int>(state.range(0));
  const auto data = fc::sample_arbitrary<fc::Rational>(config);
  for (auto _ : state) benchmark::DoNotOptimize(fc::compute_bm(data));
}
BENCHMARK(BM_ComputeBmRational)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);

static void BM_EnumerateTypes(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(fc::enumerate_types(n));
}
BENCHMARK(BM_EnumerateTypes)->DenseRange(3, 7)->Unit(benchmark::kMicrosecond);

static void BM_TestFrum(benchmark::State& state) {
  fc::SimConfig config;
  config.n = static_cast<int>(state.range(0));
  const auto data = fc::forward_frum(fc::sample_mu<double>(config), fc::all_frames(config.n));
  for (auto _ : state) benchmark::DoNotOptimize(fc::test_frum(data));
}
BENCHMARK(BM_TestFrum)->DenseRange(3, 6)->Unit(benchmark::kMicrosecond);

static void BM_RecoverBranch(benchmark::State& state) {
  fc::SimConfig config;
  config.n = static_cast<int>(state.range(0));
  const auto data = fc::forward_frum(fc::sample_mu<double>(config), fc::all_frames(config.n));
  for (auto _ : state) benchmark::DoNotOptimize(fc::recover_branch_independent(data));
}
BENCHMARK(BM_RecoverBranch)->DenseRange(3, 6)->Unit(benchmark::kMicrosecond);

static void BM_RecoverConstructive(benchmark::State& state) {
  fc::SimConfig config;
  config.n = static_cast<int>(state.range(0));
  const auto data = fc::forward_frum(fc::sample_mu<double>(config), fc::all_frames(config.n));
  for (auto _ : state) benchmark::DoNotOptimize(fc::recover_constructive(data));
}
BENCHMARK(BM_RecoverConstructive)->DenseRange(3, 6)->Unit(benchmark::kMicrosecond);

static void BM_FeasibleCompletion(benchmark::State& state) {
  fc::SimConfig config;
  config.n = static_cast<int>(state.range(0));
  const auto data = fc::forward_frum(fc::sample_mu<double>(config), fc::frames_up_to_size(config.n, 2));
  for (auto _ : state) benchmark::DoNotOptimize(fc::feasible_completion(data));
}
BENCHMARK(BM_FeasibleCompletion)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

static void BM_TestFluce(benchmark::State& state) {
  fc::SimConfig config;
  config.n = static_cast<int>(state.range(0));
  const auto params = fc::sample_fluce<double>(config);
  const auto data =
      fc::forward_fluce(params, fc::Universe::letters(config.n), fc::frames_up_to_size(config.n, 2));
  for (auto _ : state) benchmark::DoNotOptimize(fc::test_fluce(data));
}
BENCHMARK(BM_TestFluce)->RangeMultiplier(2)->Range(4, 16)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
