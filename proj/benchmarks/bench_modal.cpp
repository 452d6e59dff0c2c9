#include <random>

#include <benchmark/benchmark.h>

#include "metalogic/modal.hpp"

using namespace metalogic;

static void BM_Normalize(benchmark::State& state) {
  std::mt19937_64 rng(1);
  ModalPrefix p;
  for (int i = 0; i < state.range(0); ++i) p.ops.push_back(static_cast<UnaryOp>(rng() % 3));
  for (auto _ : state) benchmark::DoNotOptimize(normalize(p));
}
BENCHMARK(BM_Normalize)->Arg(2)->Arg(6)->Arg(64)->Arg(512);

static void BM_SemanticallyEqual(benchmark::State& state) {
  const ModalPrefix a{{UnaryOp::Box, UnaryOp::Negation, UnaryOp::Diamond, UnaryOp::Box}};
  const ModalPrefix b{{UnaryOp::Negation, UnaryOp::Diamond}};
  for (auto _ : state) benchmark::DoNotOptimize(semantically_equal(a, b));
}
BENCHMARK(BM_SemanticallyEqual);
