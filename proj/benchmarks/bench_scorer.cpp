#include <vector>

#include <benchmark/benchmark.h>

#include "metalogic/scorer.hpp"
#include "sample_graphs.hpp"

using namespace metalogic;

static void BM_ScoreSample(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto gold = bench::chain(n, 7);
  auto pred = bench::chain(n, 8);
  pred.passage = gold.passage;
  for (auto _ : state) benchmark::DoNotOptimize(score_sample(gold, pred));
}
BENCHMARK(BM_ScoreSample)->Arg(4)->Arg(16);

static void BM_ScoreDataset(benchmark::State& state) {
  std::vector<SamplePrediction> data;
  for (std::uint64_t i = 0; i < 100; ++i) {
    auto gold = bench::chain(5, i);
    auto pred = bench::chain(5, i + 1000);
    pred.passage = gold.passage;
    data.push_back({std::move(gold), std::move(pred), {}});
  }
  for (auto _ : state) benchmark::DoNotOptimize(score_dataset(data));
}
BENCHMARK(BM_ScoreDataset);
