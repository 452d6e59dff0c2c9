#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "metalogic/error.hpp"
#include "metalogic/report.hpp"
#include "metalogic/scorer.hpp"
#include "oracles.hpp"

using namespace metalogic;
using enum UnaryOp;

namespace {

constexpr auto S = EdgeType::Support;
constexpr auto R = EdgeType::Rebut;

LogicMetagraph with_edges(std::vector<MetaEdge> edges) {
  LogicMetagraph g;
  g.passage.id = "p";
  for (int i = 1; i <= 4; ++i) g.passage.sentences.push_back({"s" + std::to_string(i), "", {}});
  g.edges = std::move(edges);
  return g;
}

LogicMetagraph emptied(const LogicMetagraph& g) {
  LogicMetagraph e;
  e.passage = g.passage;
  return e;
}

}  // namespace

TEST(Nodes, Examples) {
  const auto g = with_edges({{"s1", "s2", S}, {"s2", "s3", S}});
  EXPECT_DOUBLE_EQ(score_nodes(g, g).f1, 1.0);
  EXPECT_TRUE(score_nodes(g, g).all_correct);
  const auto s = score_nodes(g, with_edges({{"s1", "s3", S}, {"s3", "s4", S}}));
  EXPECT_NEAR(s.f1, 2.0 / 3.0, 1e-12);
  EXPECT_FALSE(s.all_correct);
  EXPECT_DOUBLE_EQ(score_nodes(g, with_edges({})).f1, 0.0);
}

TEST(Steps, Examples) {
  const auto gold = with_edges({{"s1", "s3", S}, {"s2", "s3", S}});
  EXPECT_DOUBLE_EQ(score_steps(gold, with_edges({{"s1", "s3", S}, {"s4", "s3", R}})).total.f1, 0.5);
  const auto both = with_edges({{"s1", "s3", S}, {"s4", "s2", R}});
  const auto perfect = score_steps(both, both);
  EXPECT_TRUE(perfect.total.all_correct);
  ASSERT_TRUE(perfect.support && perfect.rebut);
  EXPECT_DOUBLE_EQ(perfect.support->f1, 1.0);
  EXPECT_DOUBLE_EQ(perfect.rebut->f1, 1.0);
  const auto flipped = score_steps(with_edges({{"s4", "s2", R}}), with_edges({{"s4", "s2", S}}));
  EXPECT_DOUBLE_EQ(flipped.total.f1, 0.0);
  EXPECT_FALSE(flipped.support.has_value());
  EXPECT_DOUBLE_EQ(flipped.rebut->f1, 0.0);
}

TEST(Formulae, Examples) {
  auto gold = fixture::planet_graph();
  auto pred = gold;
  std::swap(pred.formulae[0].triples[0].left, pred.formulae[0].triples[0].right);
  EXPECT_DOUBLE_EQ(score_formulae(gold, pred).f1, 1.0);
  pred.formulae[0].triples.clear();
  EXPECT_DOUBLE_EQ(score_formulae(gold, pred).f1, 0.0);
  gold.formulae.clear();
  pred.formulae.clear();
  const auto vacuous = score_formulae(gold, pred);
  EXPECT_DOUBLE_EQ(vacuous.f1, 1.0);
  EXPECT_TRUE(vacuous.all_correct);
}

TEST(Formulae, MeanOverSentences) {
  auto gold = fixture::chain_graph();
  auto pred = gold;
  pred.formulae[0].triples.clear();  // sent2 keeps its global only: 2*1/(1+2)
  EXPECT_NEAR(score_formulae(gold, pred).f1, (2.0 / 3.0 + 1.0 + 1.0) / 3.0, 1e-12);
  EXPECT_NEAR(score_formulae(gold, pred).f1, oracle::formula_f1(gold, pred), 1e-12);
}

TEST(Formulae, F1OneIffFormulaeEqual) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 400; ++trial) {
    const auto g = oracle::random_graph(rng, {}, "p");
    const auto p = oracle::perturb(rng, g);
    bool all_equal = true;
    std::set<std::string> ids;
    for (const auto& f : g.formulae) ids.insert(f.sentence);
    for (const auto& f : p.formulae) ids.insert(f.sentence);
    for (const auto& id : ids) {
      // an absent formula reads as an empty one
      const Formula none{id, {}, {}};
      const Formula* a = g.formula_for(id);
      const Formula* b = p.formula_for(id);
      if (!formulae_equal(a ? *a : none, b ? *b : none)) all_equal = false;
    }
    EXPECT_EQ(score_formulae(g, p).all_correct, all_equal);
  }
}

TEST(Certainty, Examples) {
  auto gold = fixture::planet_graph();
  EXPECT_DOUBLE_EQ(score_certainty(gold, gold).accuracy, 1.0);
  auto pred = gold;
  pred.degrees["sent1"] = CanonicalDegree::Necessary;
  const auto s = score_certainty(gold, pred);
  EXPECT_DOUBLE_EQ(s.accuracy, 0.75);
  EXPECT_FALSE(s.all_correct);
  LogicMetagraph c1 = gold;
  c1.degrees = {{"sent1", CanonicalDegree::Impossible}};
  LogicMetagraph c1p = c1;
  c1p.degrees = {{"sent1", CanonicalDegree::Possible}};
  EXPECT_DOUBLE_EQ(score_certainty(c1, c1p).accuracy, 0.0);
}

TEST(Certainty, MacroF1) {
  using D = CanonicalDegree;
  const std::vector<CertaintyPair> perfect{{D::Necessary, D::Necessary}, {D::Contingent, D::Contingent}};
  EXPECT_DOUBLE_EQ(certainty_macro_f1(perfect), 1.0);
  EXPECT_DOUBLE_EQ(certainty_macro_f1({}), 1.0);
  // gold N,N,C ; pred N,C,(unresolved): N f1 = 2/3, C f1 = 0
  const std::vector<CertaintyPair> mixed{{D::Necessary, D::Necessary}, {D::Necessary, D::Contingent},
                                         {D::Contingent, std::nullopt}};
  EXPECT_NEAR(certainty_macro_f1(mixed), (2.0 / 3.0 + 0.0) / 2.0, 1e-12);
}

TEST(Overall, Examples) {
  const auto g = fixture::planet_graph();
  EXPECT_TRUE(score_overall(g, g));
  auto one_degree = g;
  one_degree.degrees["sent4"] = CanonicalDegree::Possible;
  EXPECT_FALSE(score_overall(g, one_degree));
  auto structure = g;
  structure.edges.pop_back();
  EXPECT_FALSE(score_overall(g, structure));
}

TEST(Operators, ReversedImplication) {
  LogicMetagraph g;
  g.passage = {"p", {{"s", "", {{"v1", std::nullopt}, {"v2", std::nullopt}}}}};
  g.formulae = {{"s", {{{"v1", {}}, BinaryOp::Implication, {"v2", {}}}}, {}}};
  auto p = g;
  std::swap(p.formulae[0].triples[0].left, p.formulae[0].triples[0].right);
  const std::vector<SamplePrediction> data{{g, p, {}}};
  const auto per = score_per_operator(data);
  EXPECT_DOUBLE_EQ(per.at(OperatorClass::Implication), 0.0);
  EXPECT_DOUBLE_EQ(per.at(OperatorClass::None), 1.0);
}

TEST(Operators, DiamondPredictedEmpty) {
  LogicMetagraph g;
  g.passage = {"p", {{"s", "", {{"v1", std::nullopt}, {"v2", std::nullopt}}}}};
  g.formulae = {{"s", {{{"v1", {{Diamond}}}, BinaryOp::Conjunction, {"v2", {}}}}, {}}};
  auto p = g;
  p.formulae[0].triples[0].left.prefix = {};
  const auto counts = operator_counts(g, p);
  EXPECT_EQ(counts.at(OperatorClass::Diamond).gold, 1U);
  EXPECT_EQ(counts.at(OperatorClass::Diamond).matched, 0U);
  // v2 slot and global slot match; v1 slot adds a spurious N/A.
  EXPECT_EQ(counts.at(OperatorClass::None).gold, 2U);
  EXPECT_EQ(counts.at(OperatorClass::None).predicted, 3U);
  EXPECT_EQ(counts.at(OperatorClass::None).matched, 2U);
}

TEST(Operators, PerfectIsOneForPresentOperators) {
  std::mt19937_64 rng(2);
  std::vector<SamplePrediction> data;
  for (int i = 0; i < 30; ++i) {
    const auto g = oracle::random_graph(rng, {}, "p" + std::to_string(i));
    data.push_back({g, g, {}});
  }
  for (const auto& [op, f1] : score_per_operator(data)) EXPECT_DOUBLE_EQ(f1, 1.0) << operator_class_key(op);
}

TEST(Dataset, Means) {
  const auto g = fixture::planet_graph();
  const std::vector<SamplePrediction> one{{g, g, {}}};
  const auto r1 = score_dataset(one);
  EXPECT_DOUBLE_EQ(r1.overall_allcorrect, 1.0);
  EXPECT_DOUBLE_EQ(r1.certainty_macro_f1, 1.0);

  const std::vector<SamplePrediction> two{{g, g, {}}, {g, emptied(g), {}}};
  EXPECT_DOUBLE_EQ(score_dataset(two).overall_allcorrect, 0.5);

  const auto a = with_edges({{"s1", "s2", S}});
  const auto half = with_edges({{"s1", "s2", S}, {"s3", "s4", S}});
  const std::vector<SamplePrediction> three{{a, a, {}}, {half, a, {}}, {a, with_edges({{"s3", "s4", S}}), {}}};
  EXPECT_DOUBLE_EQ(score_dataset(three).node_f1, (1.0 + 2.0 / 3.0 + 0.0) / 3.0);
}

TEST(Dataset, PassageMismatchIsExcluded) {
  const auto g = fixture::planet_graph();
  auto other = g;
  other.passage.id = "other";
  const std::vector<SamplePrediction> data{{g, g, {}}, {g, other, {}}};
  const auto r = score_dataset(data);
  EXPECT_EQ(r.samples, 1U);
  ASSERT_EQ(r.errors.size(), 1U);
  EXPECT_DOUBLE_EQ(r.overall_allcorrect, 1.0);
  EXPECT_THROW(score_nodes(g, other), Error);
}

TEST(Dataset, IdentityOverRandomCorpus) {
  std::mt19937_64 rng(9);
  std::vector<SamplePrediction> data;
  for (int i = 0; i < 100; ++i) {
    const auto g = oracle::random_graph(rng, {}, "p" + std::to_string(i));
    data.push_back({g, g, {}});
  }
  const auto r = score_dataset(data);
  for (double v : {r.node_f1, r.node_allcorrect, r.step_f1, r.step_allcorrect, r.formula_f1, r.formula_allcorrect,
                   r.certainty_acc, r.certainty_allcorrect, r.certainty_macro_f1, r.overall_allcorrect})
    EXPECT_DOUBLE_EQ(v, 1.0);
}

TEST(Dataset, F1MatchesBruteForceOracle) {
  std::mt19937_64 rng(77);
  const oracle::GraphShape shape{.max_sentences = 4, .max_edges = 3, .max_variables = 3, .max_triples = 3};
  for (int trial = 0; trial < 300; ++trial) {
    const auto g = oracle::random_graph(rng, shape, "p");
    const auto p = oracle::perturb(rng, g);
    EXPECT_NEAR(score_nodes(g, p).f1, oracle::node_f1(g, p), 1e-12);
    EXPECT_NEAR(score_steps(g, p).total.f1, oracle::step_f1(g, p), 1e-12);
    EXPECT_NEAR(score_formulae(g, p).f1, oracle::formula_f1(g, p), 1e-12);
  }
}

TEST(Report, TableAndJson) {
  const auto g = fixture::planet_graph();
  const std::vector<SamplePrediction> data{{g, g, {}}};
  const auto r = score_dataset(data);
  const std::string table = render_table(r);
  EXPECT_NE(table.find("100.0"), std::string::npos) << table;
  const auto doc = to_json(r);
  EXPECT_EQ(doc["samples"], 1);
}
