#include <benchmark/benchmark.h>

#include <numeric>
#include <random>

#include "sumkit/oracle.hpp"
#include "sumkit/sumset.hpp"
#include "sumkit/verifier.hpp"

using namespace sumkit;

namespace {

// k distinct values in [1, 3k], fixed seed so runs are comparable.
IntSet random_set(int k, std::uint64_t seed = 42) {
  std::vector<Int> pool(static_cast<std::size_t>(3 * k));
  std::iota(pool.begin(), pool.end(), 1);
  std::mt19937_64 rng(seed);
  std::shuffle(pool.begin(), pool.end(), rng);
  pool.resize(static_cast<std::size_t>(k));
  return IntSet(pool);
}

void BM_SubsetSumsDp(benchmark::State& state) {
  const IntSet a = random_set(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(subset_sums(a));
}
BENCHMARK(BM_SubsetSumsDp)->DenseRange(8, 20, 4)->Arg(64)->Arg(256);

void BM_SubsetSumsOracle(benchmark::State& state) {
  const IntSet a = random_set(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_oracle(a, SumMode::SubsetSums));
}
BENCHMARK(BM_SubsetSumsOracle)->DenseRange(8, 20, 4);

void BM_RestrictedDp(benchmark::State& state) {
  const IntSet a = random_set(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(restricted_h_fold_sumset(a, state.range(0) / 2));
}
BENCHMARK(BM_RestrictedDp)->DenseRange(8, 20, 4);

void BM_RestrictedOracle(benchmark::State& state) {
  const IntSet a = random_set(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_oracle(a, SumMode::RestrictedHFold, state.range(0) / 2));
}
BENCHMARK(BM_RestrictedOracle)->DenseRange(8, 20, 4);

void BM_HFoldCardinality(benchmark::State& state) {
  const IntSet a = random_set(64);
  for (auto _ : state) benchmark::DoNotOptimize(h_fold_cardinality(a.elements(), state.range(0)));
}
BENCHMARK(BM_HFoldCardinality)->Arg(2)->Arg(4)->Arg(8);

void BM_SubsequenceSums(benchmark::State& state) {
  const IntSet a = random_set(16);
  const IntSequence s(std::vector<Int>(a.elements().begin(), a.elements().end()),
                      std::vector<Int>(16, state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(subsequence_sums_min_card(s, 3));
}
BENCHMARK(BM_SubsequenceSums)->Arg(1)->Arg(3)->Arg(8);

// Whole-sweep throughput, reported as sets per second.
void BM_SweepConjecture(benchmark::State& state) {
  SweepConfig cfg;
  cfg.theorem = TheoremId::FreimanLevConjecture;
  cfg.k_min = cfg.k_max = 8;
  cfg.max_elem = static_cast<Int>(state.range(0));
  cfg.jobs = 1;
  std::uint64_t objects = 0;
  for (auto _ : state) objects += verify_range(cfg).objects;
  state.counters["sets/s"] = benchmark::Counter(static_cast<double>(objects), benchmark::Counter::kIsRate);
}
BENCHMARK(BM_SweepConjecture)->Arg(16)->Arg(20)->Unit(benchmark::kMillisecond);

void BM_SweepAlphaSubsetPos(benchmark::State& state) {
  SweepConfig cfg;
  cfg.theorem = TheoremId::AlphaSubsetPos;
  cfg.k_min = 3;
  cfg.k_max = static_cast<int>(state.range(0));
  cfg.max_elem = 16;
  cfg.jobs = 1;
  std::uint64_t objects = 0;
  for (auto _ : state) objects += verify_range(cfg).objects;
  state.counters["sets/s"] = benchmark::Counter(static_cast<double>(objects), benchmark::Counter::kIsRate);
}
BENCHMARK(BM_SweepAlphaSubsetPos)->Arg(6)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
