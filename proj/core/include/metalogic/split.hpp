#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "metalogic/model.hpp"

namespace metalogic {

struct SplitIndices {
  std::vector<std::size_t> train;
  std::vector<std::size_t> dev;
  std::vector<std::size_t> test;
};

// Fisher-Yates shuffle of 0..n-1 driven by std::mt19937_64 seeded with
// `seed`; bounded draws use rejection sampling on the raw 64-bit output so the
// permutation is identical on every platform. Sizes are floor(0.6n),
// floor(0.2n) and the remainder. Throws Error(EmptyCorpus) when n == 0.
SplitIndices split_indices(std::size_t n, std::uint64_t seed);

struct CorpusSplit {
  std::vector<LogicMetagraph> train;
  std::vector<LogicMetagraph> dev;
  std::vector<LogicMetagraph> test;
};

CorpusSplit split(std::span<const LogicMetagraph> corpus, std::uint64_t seed);

// {"seed", "algorithm", "sizes": {...}, "train": [ids], "dev": [...], "test": [...]}
nlohmann::json split_manifest(const CorpusSplit& parts, std::uint64_t seed);

}  // namespace metalogic
