// Serial vs OpenMP timings for grid sampling and batched exponentials.

#include <benchmark/benchmark.h>

#include <random>

#include "matexp/batch.hpp"
#include "matexp/solver.hpp"

namespace {

using namespace matexp;

std::vector<Mat3> random_batch(std::size_t n) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-5.0, 5.0);
  std::vector<Mat3> out;
  out.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::array<double, 9> a{};
    for (double& x : a) x = u(rng);
    out.emplace_back(a);
  }
  return out;
}

const ClosedFormSolution<3>& solution() {
  static const auto sol = closed_form(Mat3{{1, -3, 4}, {4, -7, 8}, {6, -7, 7}}, Vec3{1, 0, 1});
  return sol;
}

void BM_SampleSerial(benchmark::State& state) {
  const auto grid = make_grid(-2.0, 2.0, 4.0 / static_cast<double>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(sample_serial(solution(), grid));
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(grid.size()));
}

void BM_SampleParallel(benchmark::State& state) {
  const auto grid = make_grid(-2.0, 2.0, 4.0 / static_cast<double>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(sample(solution(), grid));
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(grid.size()));
}

void BM_ExpmBatchSerial(benchmark::State& state) {
  const auto as = random_batch(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(expm_batch_serial(as, 0.5));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_ExpmBatchParallel(benchmark::State& state) {
  const auto as = random_batch(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(expm_batch(as, 0.5));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

}  // namespace

BENCHMARK(BM_SampleSerial)->Arg(1 << 12)->Arg(1 << 18);
BENCHMARK(BM_SampleParallel)->Arg(1 << 12)->Arg(1 << 18)->UseRealTime();
BENCHMARK(BM_ExpmBatchSerial)->Arg(1 << 10)->Arg(1 << 16);
BENCHMARK(BM_ExpmBatchParallel)->Arg(1 << 10)->Arg(1 << 16)->UseRealTime();

BENCHMARK_MAIN();
