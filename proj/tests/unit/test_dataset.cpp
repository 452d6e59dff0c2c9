#include <gtest/gtest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <random>
#include <set>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "metalogic/corpus.hpp"
#include "metalogic/error.hpp"
#include "metalogic/json_codec.hpp"
#include "metalogic/linearized.hpp"
#include "metalogic/split.hpp"
#include "metalogic/stats.hpp"

using namespace metalogic;
namespace fs = std::filesystem;

namespace {

std::vector<LogicMetagraph> toy_corpus() { return {fixture::planet_graph(), fixture::chain_graph()}; }

// Counted straight from the definitions, one graph at a time.
CorpusStats counted(const std::vector<LogicMetagraph>& corpus) {
  CorpusStats s;
  for (const auto& g : corpus) {
    ++s.passages;
    ++s.graphs;
    s.nodes += g.passage.sentences.size();
    for (const auto& sent : g.passage.sentences) s.variables += sent.variables.size();
    for (const auto& f : g.formulae) {
      if (!f.triples.empty()) ++s.formulae;
      s.binary_ops += f.triples.size();
      s.global_unary_ops += f.global.size();
      for (const auto& t : f.triples) s.local_unary_ops += t.left.prefix.size() + t.right.prefix.size();
    }
    bool rebut = false, step = false, premise = false;
    std::map<std::string, int> support_in;
    std::set<std::string> supporters;
    for (const auto& e : g.edges) {
      if (e.kind == EdgeType::Rebut) {
        rebut = true;
        continue;
      }
      ++support_in[e.conclusion];
      supporters.insert(e.premise);
    }
    for (const auto& [node, n] : support_in) {
      if (n >= 2) premise = true;
      if (supporters.contains(node)) step = true;
    }
    s.rebuttal_graphs += rebut;
    s.multi_step_graphs += step;
    s.multi_premise_graphs += premise;
    s.all_three_graphs += rebut && step && premise;
  }
  return s;
}

fs::path scratch(const std::string& name) {
  auto p = fs::temp_directory_path() / ("metalogic_dataset_" + name);
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

void write_file(const fs::path& p, const std::string& text) {
  std::ofstream out(p);
  out << text;
}

}  // namespace

TEST(Stats, ToyCorpusHandCounts) {
  const auto corpus = toy_corpus();
  const auto s = compute_stats(corpus);
  EXPECT_EQ(s.passages, 2U);
  EXPECT_EQ(s.graphs, 2U);
  EXPECT_EQ(s.nodes, 9U);
  EXPECT_EQ(s.formulae, 3U);
  EXPECT_EQ(s.rebuttal_graphs, 2U);
  EXPECT_EQ(s.multi_step_graphs, 1U);
  EXPECT_EQ(s.multi_premise_graphs, 2U);
  EXPECT_EQ(s.all_three_graphs, 1U);
  EXPECT_EQ(s.variables, 16U);
  EXPECT_EQ(s.binary_ops, 4U);
  EXPECT_EQ(s.global_unary_ops, 4U);
  EXPECT_EQ(s.local_unary_ops, 5U);
  EXPECT_DOUBLE_EQ(s.avg_nodes(), 4.5);
  EXPECT_DOUBLE_EQ(s.avg_formulae(), 1.5);
  EXPECT_DOUBLE_EQ(s.avg_variables(), 8.0);
  EXPECT_DOUBLE_EQ(s.avg_binary(), 2.0);
  EXPECT_DOUBLE_EQ(s.avg_global_unary(), 2.0);
  EXPECT_DOUBLE_EQ(s.avg_local_unary(), 2.5);
  EXPECT_EQ(s, counted(corpus));
}

TEST(Stats, RandomCorporaMatchCounting) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<LogicMetagraph> corpus;
    const int n = static_cast<int>(rng() % 6) + 1;
    for (int i = 0; i < n; ++i) corpus.push_back(oracle::random_graph(rng, {}, "p" + std::to_string(i)));
    EXPECT_EQ(compute_stats(corpus), counted(corpus));
  }
}

TEST(Stats, EmptyCorpus) {
  const auto s = compute_stats({});
  EXPECT_EQ(s, CorpusStats{});
  EXPECT_FALSE(s.averages_defined());
  EXPECT_EQ(s.avg_nodes(), 0.0);
  const auto j = to_json(s);
  EXPECT_FALSE(j.at("averages_defined").get<bool>());
  EXPECT_EQ(j.at("averages").at("nodes").get<double>(), 0.0);
}

TEST(Stats, PermutationAndPartition) {
  std::mt19937_64 rng(5);
  std::vector<LogicMetagraph> corpus;
  for (int i = 0; i < 12; ++i) corpus.push_back(oracle::random_graph(rng, {}, "p" + std::to_string(i)));
  const auto whole = compute_stats(corpus);
  for (int trial = 0; trial < 20; ++trial) {
    auto shuffled = corpus;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    EXPECT_EQ(compute_stats(shuffled), whole);
    const auto cut = static_cast<std::ptrdiff_t>(rng() % (corpus.size() + 1));
    auto sum = compute_stats(std::span(shuffled).first(static_cast<std::size_t>(cut)));
    sum += compute_stats(std::span(shuffled).subspan(static_cast<std::size_t>(cut)));
    EXPECT_EQ(sum, whole);
  }
}

TEST(Stats, InvalidGraphNamed) {
  auto bad = fixture::planet_graph();
  bad.edges.push_back({"sent3", "sent1", EdgeType::Support});
  std::vector corpus{fixture::chain_graph(), bad};
  try {
    compute_stats(corpus);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::InvalidGraph);
    EXPECT_NE(std::string(e.what()).find("planet"), std::string::npos);
  }
}

TEST(Stats, TableRoundsAverages) {
  const auto table = render_table(compute_stats(toy_corpus()));
  EXPECT_NE(table.find("4.50"), std::string::npos);
  EXPECT_NE(table.find("2.50"), std::string::npos);
}

TEST(Split, Sizes) {
  for (auto [n, train, dev, test] : std::vector<std::array<std::size_t, 4>>{
           {10, 6, 2, 2}, {1000, 600, 200, 200}, {1, 0, 0, 1}, {7, 4, 1, 2}, {3, 1, 0, 2}}) {
    const auto s = split_indices(n, 42);
    EXPECT_EQ(s.train.size(), train) << n;
    EXPECT_EQ(s.dev.size(), dev) << n;
    EXPECT_EQ(s.test.size(), test) << n;
  }
}

TEST(Split, DisjointExhaustiveDeterministic) {
  for (std::uint64_t seed : {0ULL, 1ULL, 99ULL, 0xFFFFFFFFFFFFFFFFULL}) {
    const auto a = split_indices(257, seed);
    const auto b = split_indices(257, seed);
    EXPECT_EQ(a.train, b.train);
    EXPECT_EQ(a.dev, b.dev);
    EXPECT_EQ(a.test, b.test);
    std::vector<std::size_t> all;
    for (const auto* part : {&a.train, &a.dev, &a.test}) all.insert(all.end(), part->begin(), part->end());
    std::sort(all.begin(), all.end());
    std::vector<std::size_t> expect(257);
    std::iota(expect.begin(), expect.end(), 0U);
    EXPECT_EQ(all, expect);
  }
  EXPECT_NE(split_indices(257, 1).train, split_indices(257, 2).train);
}

TEST(Split, CorpusAndManifest) {
  std::mt19937_64 rng(3);
  std::vector<LogicMetagraph> corpus;
  for (int i = 0; i < 10; ++i) corpus.push_back(oracle::random_graph(rng, {}, "p" + std::to_string(i)));
  const auto parts = split(corpus, 7);
  ASSERT_EQ(parts.train.size(), 6U);
  const auto idx = split_indices(10, 7);
  for (std::size_t i = 0; i < idx.train.size(); ++i) EXPECT_EQ(parts.train[i], corpus[idx.train[i]]);
  const auto m = split_manifest(parts, 7);
  EXPECT_EQ(m.at("seed").get<std::uint64_t>(), 7U);
  EXPECT_EQ(m.at("sizes").at("dev").get<std::size_t>(), 2U);
  EXPECT_EQ(m.at("test").size(), 2U);
}

TEST(Split, EmptyCorpus) {
  try {
    split_indices(0, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::EmptyCorpus);
  }
}

TEST(Corpus, ValidDirectory) {
  const auto dir = scratch("valid");
  write_file(dir / "a.json", write_json_corpus(toy_corpus()).dump(2));
  write_file(dir / "b.lin", "planet " + serialize_linearized(fixture::planet_graph()) + "\n");
  write_file(dir / "notes.md", "ignored");
  const auto report = validate_corpus({dir});
  ASSERT_EQ(report.files.size(), 2U);
  EXPECT_TRUE(report.ok());
  EXPECT_TRUE(report.histogram.empty());
  EXPECT_EQ(report.graphs.size(), 3U);
  EXPECT_EQ(report.files[1].adapter, "linearized");
}

TEST(Corpus, MixedProblems) {
  const auto dir = scratch("mixed");
  auto cyclic = fixture::planet_graph();
  cyclic.edges.push_back({"sent3", "sent1", EdgeType::Support});
  write_file(dir / "cycle.json", write_json(cyclic).dump());
  write_file(dir / "broken.json", "{\"passage\": ");
  write_file(dir / "good.jsonl", write_json(fixture::chain_graph()).dump() + "\n");
  const auto report = validate_corpus({dir, dir / "missing.json"});
  ASSERT_EQ(report.files.size(), 4U);
  EXPECT_FALSE(report.ok());
  EXPECT_TRUE(report.has_io_errors());
  EXPECT_EQ(report.histogram, (std::map<std::string, std::size_t>{{"CYCLE", 1}}));
  std::map<std::string, FileStatus> status;
  for (const auto& f : report.files) status[f.path.filename().string()] = f.status;
  EXPECT_EQ(status["cycle.json"], FileStatus::Invalid);
  EXPECT_EQ(status["broken.json"], FileStatus::SchemaError);
  EXPECT_EQ(status["good.jsonl"], FileStatus::Ok);
  EXPECT_EQ(status["missing.json"], FileStatus::IoError);
  const auto j = to_json(report);
  EXPECT_EQ(j.at("histogram").at("CYCLE").get<int>(), 1);
}
