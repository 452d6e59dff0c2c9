#include "metalogic/split.hpp"

#include <limits>
#include <numeric>
#include <random>

#include "metalogic/error.hpp"

namespace metalogic {

namespace {

// Uniform draw from [0, bound) without modulo bias.
std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do x = rng();
  while (x >= limit);
  return x % bound;
}

}  // namespace

SplitIndices split_indices(std::size_t n, std::uint64_t seed) {
  if (n == 0) throw Error(Errc::EmptyCorpus, "cannot split an empty corpus");
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::mt19937_64 rng(seed);
  for (std::size_t i = n - 1; i > 0; --i) std::swap(order[i], order[bounded(rng, i + 1)]);

  const std::size_t n_train = n * 6 / 10;
  const std::size_t n_dev = n * 2 / 10;
  SplitIndices out;
  out.train.assign(order.begin(), order.begin() + n_train);
  out.dev.assign(order.begin() + n_train, order.begin() + n_train + n_dev);
  out.test.assign(order.begin() + n_train + n_dev, order.end());
  return out;
}

CorpusSplit split(std::span<const LogicMetagraph> corpus, std::uint64_t seed) {
  const auto idx = split_indices(corpus.size(), seed);
  CorpusSplit out;
  for (auto i : idx.train) out.train.push_back(corpus[i]);
  for (auto i : idx.dev) out.dev.push_back(corpus[i]);
  for (auto i : idx.test) out.test.push_back(corpus[i]);
  return out;
}

nlohmann::json split_manifest(const CorpusSplit& parts, std::uint64_t seed) {
  auto ids = [](const std::vector<LogicMetagraph>& part) {
    auto arr = nlohmann::json::array();
    for (const auto& g : part) arr.push_back(g.passage.id);
    return arr;
  };
  return {
      {"seed", seed},
      {"algorithm", "fisher-yates/mt19937_64/rejection"},
      {"sizes", {{"train", parts.train.size()}, {"dev", parts.dev.size()}, {"test", parts.test.size()}}},
      {"train", ids(parts.train)},
      {"dev", ids(parts.dev)},
      {"test", ids(parts.test)},
  };
}

}  // namespace metalogic
