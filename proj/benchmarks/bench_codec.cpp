#include <benchmark/benchmark.h>

#include "metalogic/json_codec.hpp"
#include "metalogic/linearized.hpp"
#include "sample_graphs.hpp"

using namespace metalogic;

static void BM_Serialize(benchmark::State& state) {
  const auto g = bench::chain(static_cast<std::size_t>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(serialize_linearized(g));
}
BENCHMARK(BM_Serialize)->Arg(4)->Arg(32);

static void BM_ParseStrict(benchmark::State& state) {
  const auto g = bench::chain(static_cast<std::size_t>(state.range(0)), 3);
  const auto text = serialize_linearized(g);
  for (auto _ : state) benchmark::DoNotOptimize(parse_linearized(text, g.passage, ParseMode::Strict));
}
BENCHMARK(BM_ParseStrict)->Arg(4)->Arg(32);

static void BM_JsonRoundTrip(benchmark::State& state) {
  const auto g = bench::chain(8, 5);
  for (auto _ : state) benchmark::DoNotOptimize(read_json(write_json(g)));
}
BENCHMARK(BM_JsonRoundTrip);
