#include "sample_graphs.hpp"

#include <random>
#include <string>

namespace bench {

using namespace metalogic;

LogicMetagraph chain(std::size_t sentences, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto prefix = [&] {
    ModalPrefix p;
    for (std::size_t i = rng() % 3; i > 0; --i) p.ops.push_back(static_cast<UnaryOp>(rng() % 3));
    return p;
  };
  LogicMetagraph g;
  g.passage.id = "bench" + std::to_string(seed);
  for (std::size_t i = 1; i <= sentences; ++i) {
    Sentence s;
    s.id = "sent" + std::to_string(i);
    for (std::size_t v = 1; v <= 3; ++v) {
      const std::size_t begin = s.text.size() + (s.text.empty() ? 0 : 1);
      s.text += (s.text.empty() ? "" : " ") + std::string("clause") + std::to_string(v);
      s.variables.push_back({"v" + std::to_string(v), CharSpan{begin, s.text.size()}});
    }
    if (i > 1) {
      const std::size_t premise = 1 + rng() % (i - 1);
      g.edges.push_back({"sent" + std::to_string(premise), s.id, rng() % 4 == 0 ? EdgeType::Rebut : EdgeType::Support});
    }
    Formula f{s.id, {}, prefix()};
    f.triples.push_back({{"v1", prefix()}, static_cast<BinaryOp>(rng() % 3), {"v2", prefix()}});
    f.triples.push_back({{"v2", prefix()}, static_cast<BinaryOp>(rng() % 3), {"v3", prefix()}});
    g.formulae.push_back(std::move(f));
    g.degrees[s.id] = static_cast<CanonicalDegree>(rng() % 5);
    g.passage.sentences.push_back(std::move(s));
  }
  return g;
}

}  // namespace bench
