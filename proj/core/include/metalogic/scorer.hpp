#pragma once

// Evaluation of predicted metagraphs against gold annotations along four
// dimensions (nodes, steps, formulae, certainty), each with an F1 or accuracy
// and a per-sample AllCorrect bit, plus per-type and per-operator breakdowns.

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "metalogic/formula.hpp"
#include "metalogic/linearized.hpp"
#include "metalogic/model.hpp"

namespace metalogic {

struct F1Score {
  double f1 = 0.0;
  bool all_correct = false;
};

// F1 from match counts. No gold and no predictions is a perfect (vacuous) match.
double f1_from_counts(std::size_t matched, std::size_t predicted, std::size_t gold);

struct StepScore {
  F1Score total;
  // Present only when the gold graph has steps of that kind.
  std::optional<F1Score> support;
  std::optional<F1Score> rebut;
};

struct CertaintyPair {
  CanonicalDegree gold;
  std::optional<CanonicalDegree> pred;  // nullopt: missing or unresolved
};

struct CertaintyScore {
  double accuracy = 1.0;
  bool all_correct = true;
  std::vector<CertaintyPair> pairs;
};

// All functions below throw Error(PassageMismatch) when gold and prediction
// name different passages. Predictions need not be valid graphs.
F1Score score_nodes(const LogicMetagraph& gold, const LogicMetagraph& pred);
StepScore score_steps(const LogicMetagraph& gold, const LogicMetagraph& pred);
F1Score score_formulae(const LogicMetagraph& gold, const LogicMetagraph& pred);
CertaintyScore score_certainty(const LogicMetagraph& gold, const LogicMetagraph& pred);
bool score_overall(const LogicMetagraph& gold, const LogicMetagraph& pred);

// Macro-F1 over the degree classes that occur among gold or predicted labels.
// Unresolved predictions count against the gold class. No pairs scores 1.
double certainty_macro_f1(std::span<const CertaintyPair> pairs);

enum class OperatorClass { Implication, Conjunction, Disjunction, Negation, Box, Diamond, None };

inline constexpr OperatorClass kAllOperatorClasses[] = {
    OperatorClass::Implication, OperatorClass::Conjunction, OperatorClass::Disjunction,
    OperatorClass::Negation,    OperatorClass::Box,         OperatorClass::Diamond,
    OperatorClass::None};

std::string_view operator_class_key(OperatorClass op);     // "entail", ..., "n/a"
std::string_view operator_class_symbol(OperatorClass op);  // "→", ..., "N/A"

struct MatchCounts {
  std::size_t matched = 0;
  std::size_t predicted = 0;
  std::size_t gold = 0;

  MatchCounts& operator+=(const MatchCounts& other);
  double f1() const { return f1_from_counts(matched, predicted, gold); }
};

// Binary operators are counted over matched canonical triples. Unary
// operators are counted per (sentence, variable) occurrence slot: each element
// of the slot's canonical prefix is one instance, an empty prefix is one N/A
// instance. Global prefixes occupy one slot per formula.
std::map<OperatorClass, MatchCounts> operator_counts(const LogicMetagraph& gold, const LogicMetagraph& pred);

struct SamplePrediction {
  LogicMetagraph gold;
  LogicMetagraph pred;
  std::vector<Diagnostic> diagnostics;

  // A strict parse that failed scores as an empty prediction.
  static SamplePrediction from_outcome(LogicMetagraph gold, const ParseOutcome& outcome);
};

// Pooled micro-F1 per operator; operators absent from both sides are omitted.
std::map<OperatorClass, double> score_per_operator(std::span<const SamplePrediction> dataset);

struct SampleScore {
  F1Score nodes;
  StepScore steps;
  F1Score formulae;
  CertaintyScore certainty;
  bool overall = false;
};

SampleScore score_sample(const LogicMetagraph& gold, const LogicMetagraph& pred);

struct SampleError {
  std::string passage_id;
  std::string message;
};

struct ScoreReport {
  std::size_t samples = 0;
  double node_f1 = 0, node_allcorrect = 0;
  double step_f1 = 0, step_allcorrect = 0;
  double formula_f1 = 0, formula_allcorrect = 0;
  double certainty_acc = 0, certainty_allcorrect = 0, certainty_macro_f1 = 0;
  double overall_allcorrect = 0;
  // Averaged over samples whose gold graph has that step kind.
  std::optional<double> support_f1, support_allcorrect;
  std::optional<double> rebut_f1, rebut_allcorrect;
  std::map<OperatorClass, double> per_operator_f1;
  std::size_t diagnostics = 0;
  std::vector<SampleError> errors;
};

// Means over samples; samples that fail (e.g. passage mismatch) are listed in
// `errors` and left out of every average.
ScoreReport score_dataset(std::span<const SamplePrediction> dataset);

}  // namespace metalogic
