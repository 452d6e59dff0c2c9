#include "metalogic/scorer.hpp"

#include <algorithm>
#include <set>

#include "metalogic/error.hpp"
#include "metalogic/modal.hpp"

namespace metalogic {

namespace {

void require_same_passage(const LogicMetagraph& gold, const LogicMetagraph& pred) {
  if (gold.passage.id != pred.passage.id)
    throw Error(Errc::PassageMismatch,
                "gold '" + gold.passage.id + "' vs prediction '" + pred.passage.id + "'");
}

template <typename Set>
std::size_t intersection_size(const Set& a, const Set& b) {
  std::size_t n = 0;
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      ++n;
      ++i;
      ++j;
    }
  }
  return n;
}

template <typename Set>
F1Score set_f1(const Set& gold, const Set& pred) {
  const double f1 = f1_from_counts(intersection_size(gold, pred), pred.size(), gold.size());
  return {f1, f1 == 1.0};
}

// Steps of a possibly invalid prediction; duplicates collapse.
std::set<Step> steps_of(const LogicMetagraph& graph) {
  std::set<Step> steps;
  for (const auto& e : graph.edges) steps.insert({e.premise, e.conclusion, e.kind});
  return steps;
}

std::set<Step> only(const std::set<Step>& steps, EdgeType kind) {
  std::set<Step> out;
  for (const auto& s : steps)
    if (s.kind == kind) out.insert(s);
  return out;
}

// What a formula contributes to matching: its canonical triples and, when it
// is not empty, its canonical global prefix.
struct FormulaItem {
  std::optional<CanonicalPrefix> global;
  CanonicalTriple triple;
  friend auto operator<=>(const FormulaItem&, const FormulaItem&) = default;
};

std::multiset<FormulaItem> formula_items(const Formula* formula) {
  std::multiset<FormulaItem> items;
  if (!formula) return items;
  for (const auto& t : triple_multiset(*formula)) items.insert({std::nullopt, t});
  if (const auto g = normalize(formula->global); g != CanonicalPrefix::Empty) items.insert({g, {}});
  return items;
}

// All formulae of one sentence; a prediction may repeat a sentence label.
Formula merged_formula(const LogicMetagraph& graph, const std::string& sentence, bool& found) {
  Formula merged{sentence, {}, {}};
  found = false;
  for (const auto& f : graph.formulae) {
    if (f.sentence != sentence) continue;
    if (!found) merged.global = f.global;
    found = true;
    merged.triples.insert(merged.triples.end(), f.triples.begin(), f.triples.end());
  }
  return merged;
}

std::set<std::string> formula_sentences(const LogicMetagraph& graph) {
  std::set<std::string> out;
  for (const auto& f : graph.formulae) out.insert(f.sentence);
  return out;
}

std::vector<OperatorClass> classes_of(CanonicalPrefix prefix) {
  switch (prefix) {
    case CanonicalPrefix::Empty: return {OperatorClass::None};
    case CanonicalPrefix::Neg: return {OperatorClass::Negation};
    case CanonicalPrefix::Box: return {OperatorClass::Box};
    case CanonicalPrefix::Diamond: return {OperatorClass::Diamond};
    case CanonicalPrefix::NegBox: return {OperatorClass::Negation, OperatorClass::Box};
    case CanonicalPrefix::NegDiamond: return {OperatorClass::Negation, OperatorClass::Diamond};
  }
  return {};
}

OperatorClass class_of(BinaryOp op) {
  switch (op) {
    case BinaryOp::Implication: return OperatorClass::Implication;
    case BinaryOp::Conjunction: return OperatorClass::Conjunction;
    case BinaryOp::Disjunction: return OperatorClass::Disjunction;
  }
  return OperatorClass::None;
}

struct UnaryItem {
  std::string variable;  // empty for the global slot
  OperatorClass op;
  friend auto operator<=>(const UnaryItem&, const UnaryItem&) = default;
};

std::multiset<UnaryItem> unary_items(const Formula& formula, bool present) {
  std::multiset<UnaryItem> items;
  if (!present) return items;
  for (const auto& t : triple_multiset(formula)) {
    for (const auto* side : {&t.left, &t.right})
      for (const auto op : classes_of(side->prefix)) items.insert({side->variable, op});
  }
  for (const auto op : classes_of(normalize(formula.global))) items.insert({"", op});
  return items;
}

}  // namespace

double f1_from_counts(std::size_t matched, std::size_t predicted, std::size_t gold) {
  if (predicted == 0 && gold == 0) return 1.0;
  if (matched == 0) return 0.0;
  const double precision = static_cast<double>(matched) / static_cast<double>(predicted);
  const double recall = static_cast<double>(matched) / static_cast<double>(gold);
  return 2.0 * precision * recall / (precision + recall);
}

F1Score score_nodes(const LogicMetagraph& gold, const LogicMetagraph& pred) {
  require_same_passage(gold, pred);
  return set_f1(participating_sentences(gold), participating_sentences(pred));
}

StepScore score_steps(const LogicMetagraph& gold, const LogicMetagraph& pred) {
  require_same_passage(gold, pred);
  const auto gold_steps = steps_of(gold);
  const auto pred_steps = steps_of(pred);
  StepScore out;
  out.total = set_f1(gold_steps, pred_steps);
  for (const EdgeType kind : {EdgeType::Support, EdgeType::Rebut}) {
    const auto g = only(gold_steps, kind);
    if (g.empty()) continue;
    (kind == EdgeType::Support ? out.support : out.rebut) = set_f1(g, only(pred_steps, kind));
  }
  return out;
}

F1Score score_formulae(const LogicMetagraph& gold, const LogicMetagraph& pred) {
  require_same_passage(gold, pred);
  std::set<std::string> sentences = formula_sentences(gold);
  sentences.merge(formula_sentences(pred));
  if (sentences.empty()) return {1.0, true};

  double total = 0.0;
  bool all = true;
  for (const auto& id : sentences) {
    bool in_gold = false, in_pred = false;
    const Formula g = merged_formula(gold, id, in_gold);
    const Formula p = merged_formula(pred, id, in_pred);
    const auto gi = formula_items(in_gold ? &g : nullptr);
    const auto pi = formula_items(in_pred ? &p : nullptr);
    const F1Score s = set_f1(gi, pi);
    total += s.f1;
    all = all && s.all_correct;
  }
  return {total / static_cast<double>(sentences.size()), all};
}

CertaintyScore score_certainty(const LogicMetagraph& gold, const LogicMetagraph& pred) {
  require_same_passage(gold, pred);
  CertaintyScore out;
  std::size_t correct = 0;
  for (const auto& [id, degree] : gold.degrees) {
    std::optional<CanonicalDegree> predicted;
    if (const auto it = pred.degrees.find(id); it != pred.degrees.end()) predicted = it->second;
    if (predicted == degree) ++correct;
    out.pairs.push_back({degree, predicted});
  }
  if (!out.pairs.empty()) {
    out.accuracy = static_cast<double>(correct) / static_cast<double>(out.pairs.size());
    out.all_correct = correct == out.pairs.size();
  }
  return out;
}

bool score_overall(const LogicMetagraph& gold, const LogicMetagraph& pred) {
  return score_steps(gold, pred).total.all_correct && score_formulae(gold, pred).all_correct &&
         score_certainty(gold, pred).all_correct;
}

double certainty_macro_f1(std::span<const CertaintyPair> pairs) {
  if (pairs.empty()) return 1.0;
  std::set<CanonicalDegree> classes;
  for (const auto& p : pairs) {
    classes.insert(p.gold);
    if (p.pred) classes.insert(*p.pred);
  }
  double sum = 0.0;
  for (const auto c : classes) {
    std::size_t tp = 0, fp = 0, fn = 0;
    for (const auto& p : pairs) {
      const bool pred_c = p.pred == c;
      if (p.gold == c && pred_c) ++tp;
      if (p.gold != c && pred_c) ++fp;
      if (p.gold == c && !pred_c) ++fn;
    }
    sum += tp == 0 ? 0.0 : 2.0 * static_cast<double>(tp) / static_cast<double>(2 * tp + fp + fn);
  }
  return sum / static_cast<double>(classes.size());
}

std::string_view operator_class_key(OperatorClass op) {
  switch (op) {
    case OperatorClass::Implication: return "entail";
    case OperatorClass::Conjunction: return "and";
    case OperatorClass::Disjunction: return "or";
    case OperatorClass::Negation: return "negative";
    case OperatorClass::Box: return "necessary";
    case OperatorClass::Diamond: return "possible";
    case OperatorClass::None: return "n/a";
  }
  return "n/a";
}

std::string_view operator_class_symbol(OperatorClass op) {
  switch (op) {
    case OperatorClass::Implication: return "→";
    case OperatorClass::Conjunction: return "∧";
    case OperatorClass::Disjunction: return "∨";
    case OperatorClass::Negation: return "¬";
    case OperatorClass::Box: return "□";
    case OperatorClass::Diamond: return "◇";
    case OperatorClass::None: return "N/A";
  }
  return "N/A";
}

MatchCounts& MatchCounts::operator+=(const MatchCounts& other) {
  matched += other.matched;
  predicted += other.predicted;
  gold += other.gold;
  return *this;
}

std::map<OperatorClass, MatchCounts> operator_counts(const LogicMetagraph& gold, const LogicMetagraph& pred) {
  require_same_passage(gold, pred);
  std::map<OperatorClass, MatchCounts> counts;
  std::set<std::string> sentences = formula_sentences(gold);
  sentences.merge(formula_sentences(pred));

  for (const auto& id : sentences) {
    bool in_gold = false, in_pred = false;
    const Formula g = merged_formula(gold, id, in_gold);
    const Formula p = merged_formula(pred, id, in_pred);

    const auto gt = triple_multiset(g);
    const auto pt = triple_multiset(p);
    for (const auto& t : gt) ++counts[class_of(t.op)].gold;
    for (const auto& t : pt) ++counts[class_of(t.op)].predicted;
    std::vector<CanonicalTriple> common;
    std::set_intersection(gt.begin(), gt.end(), pt.begin(), pt.end(), std::back_inserter(common));
    for (const auto& t : common) ++counts[class_of(t.op)].matched;

    const auto gu = unary_items(g, in_gold);
    const auto pu = unary_items(p, in_pred);
    for (const auto& u : gu) ++counts[u.op].gold;
    for (const auto& u : pu) ++counts[u.op].predicted;
    std::vector<UnaryItem> shared;
    std::set_intersection(gu.begin(), gu.end(), pu.begin(), pu.end(), std::back_inserter(shared));
    for (const auto& u : shared) ++counts[u.op].matched;
  }
  return counts;
}

SamplePrediction SamplePrediction::from_outcome(LogicMetagraph gold, const ParseOutcome& outcome) {
  SamplePrediction sample;
  if (outcome.graph) {
    sample.pred = *outcome.graph;
  } else {
    sample.pred.passage = gold.passage;
  }
  sample.gold = std::move(gold);
  sample.diagnostics = outcome.diagnostics;
  return sample;
}

std::map<OperatorClass, double> score_per_operator(std::span<const SamplePrediction> dataset) {
  std::map<OperatorClass, MatchCounts> pooled;
  for (const auto& sample : dataset) {
    if (sample.gold.passage.id != sample.pred.passage.id) continue;
    for (const auto& [op, c] : operator_counts(sample.gold, sample.pred)) pooled[op] += c;
  }
  std::map<OperatorClass, double> out;
  for (const auto& [op, c] : pooled)
    if (c.gold + c.predicted > 0) out[op] = c.f1();
  return out;
}

SampleScore score_sample(const LogicMetagraph& gold, const LogicMetagraph& pred) {
  SampleScore s;
  s.nodes = score_nodes(gold, pred);
  s.steps = score_steps(gold, pred);
  s.formulae = score_formulae(gold, pred);
  s.certainty = score_certainty(gold, pred);
  s.overall = s.steps.total.all_correct && s.formulae.all_correct && s.certainty.all_correct;
  return s;
}

ScoreReport score_dataset(std::span<const SamplePrediction> dataset) {
  ScoreReport report;
  std::vector<CertaintyPair> pool;
  double support_f1 = 0, support_all = 0, rebut_f1 = 0, rebut_all = 0;
  std::size_t support_n = 0, rebut_n = 0;
  auto bit = [](bool b) { return b ? 1.0 : 0.0; };

  for (const auto& sample : dataset) {
    report.diagnostics += sample.diagnostics.size();
    SampleScore s;
    try {
      s = score_sample(sample.gold, sample.pred);
    } catch (const Error& e) {
      report.errors.push_back({sample.gold.passage.id, e.what()});
      continue;
    }
    ++report.samples;
    report.node_f1 += s.nodes.f1;
    report.node_allcorrect += bit(s.nodes.all_correct);
    report.step_f1 += s.steps.total.f1;
    report.step_allcorrect += bit(s.steps.total.all_correct);
    report.formula_f1 += s.formulae.f1;
    report.formula_allcorrect += bit(s.formulae.all_correct);
    report.certainty_acc += s.certainty.accuracy;
    report.certainty_allcorrect += bit(s.certainty.all_correct);
    report.overall_allcorrect += bit(s.overall);
    if (s.steps.support) {
      ++support_n;
      support_f1 += s.steps.support->f1;
      support_all += bit(s.steps.support->all_correct);
    }
    if (s.steps.rebut) {
      ++rebut_n;
      rebut_f1 += s.steps.rebut->f1;
      rebut_all += bit(s.steps.rebut->all_correct);
    }
    pool.insert(pool.end(), s.certainty.pairs.begin(), s.certainty.pairs.end());
  }

  if (report.samples > 0) {
    const double n = static_cast<double>(report.samples);
    for (double* field : {&report.node_f1, &report.node_allcorrect, &report.step_f1, &report.step_allcorrect,
                          &report.formula_f1, &report.formula_allcorrect, &report.certainty_acc,
                          &report.certainty_allcorrect, &report.overall_allcorrect})
      *field /= n;
    report.certainty_macro_f1 = certainty_macro_f1(pool);
  }
  if (support_n > 0) {
    report.support_f1 = support_f1 / static_cast<double>(support_n);
    report.support_allcorrect = support_all / static_cast<double>(support_n);
  }
  if (rebut_n > 0) {
    report.rebut_f1 = rebut_f1 / static_cast<double>(rebut_n);
    report.rebut_allcorrect = rebut_all / static_cast<double>(rebut_n);
  }
  report.per_operator_f1 = score_per_operator(dataset);
  return report;
}

}  // namespace metalogic
