#include <benchmark/benchmark.h>

#include <cstdint>
#include <random>
#include <vector>

#include "wilnot/kernels.hpp"
#include "wilnot/synth.hpp"
#include "wilnot/verify.hpp"

namespace wilnot {
namespace {


void BM_PermutationSerial(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  Circuit c = wilnot(d);
  std::vector<std::uint32_t> out(basis_size(d, d));
  for (auto _ : state) {
    kernels::permutation_serial(c, out);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(out.size()));
}

void BM_PermutationParallel(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const int threads = static_cast<int>(state.range(1));
  Circuit c = wilnot(d);
  std::vector<std::uint32_t> out(basis_size(d, d));
  for (auto _ : state) {
    kernels::permutation_parallel(c, out, threads);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(out.size()));
}

void BM_ShiftCheckSerial(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  Circuit c = wilnot(d);
  auto expected = LinearMapZd::cyclic_shift(d, d, 1);
  const auto count = basis_size(d, d);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::first_mismatch_serial(c, expected, count));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(count));
}

void BM_ShiftCheckParallel(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const int threads = static_cast<int>(state.range(1));
  Circuit c = wilnot(d);
  auto expected = LinearMapZd::cyclic_shift(d, d, 1);
  const auto count = basis_size(d, d);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::first_mismatch_parallel(c, expected, count, threads));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(count));
}

void BM_EvenSamplesSerial(benchmark::State& state) {
  const int d = 8;
  Circuit c = wilnot_even(d);
  auto expected = even_variant_map(d);
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<int> pick(0, d - 1);
  std::vector<int> labels(static_cast<std::size_t>(state.range(0)) * d);
  for (auto& x : labels) x = pick(rng);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::first_sample_mismatch_serial(c, expected, labels));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_EvenSamplesParallel(benchmark::State& state) {
  const int d = 8;
  Circuit c = wilnot_even(d);
  auto expected = even_variant_map(d);
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<int> pick(0, d - 1);
  std::vector<int> labels(static_cast<std::size_t>(state.range(0)) * d);
  for (auto& x : labels) x = pick(rng);
  const int threads = static_cast<int>(state.range(1));
  for (auto _ : state)
    benchmark::DoNotOptimize(kernels::first_sample_mismatch_parallel(c, expected, labels, threads));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

}  // namespace
}  // namespace wilnot

using namespace wilnot;

BENCHMARK(BM_PermutationSerial)->Arg(5)->Arg(7)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PermutationParallel)->ArgsProduct({{5, 7}, {2, 4, 8}})->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_ShiftCheckSerial)->Arg(7)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ShiftCheckParallel)->ArgsProduct({{7}, {2, 4, 8}})->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_EvenSamplesSerial)->Arg(1'000'000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EvenSamplesParallel)->ArgsProduct({{1'000'000}, {2, 4, 8}})->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
