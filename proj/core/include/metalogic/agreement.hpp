#pragma once

// Cohen's kappa and the four annotation-agreement dimensions: meta-node
// roles, meta-edge adjacency, per-token variable membership and in-sentence
// logical relations.

#include <cstddef>
#include <functional>
#include <map>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "metalogic/model.hpp"
#include "metalogic/text.hpp"

namespace metalogic {

struct KappaResult {
  double kappa = 1.0;
  double observed = 1.0;  // p_o
  double expected = 1.0;  // p_e
  std::size_t items = 0;
  std::size_t label_space = 0;
  // Pooled (label_a, label_b) -> count.
  std::map<std::pair<std::string, std::string>, std::size_t> confusion;
};

// κ = (p_o − p_e) / (1 − p_e). When p_e = 1 the value is 1 if p_o = 1, else 0.
// Throws Error(EmptyInput | LengthMismatch | UnknownLabel).
KappaResult cohen_kappa(std::span<const std::string> labels_a, std::span<const std::string> labels_b,
                        const std::set<std::string>& label_space);

double kappa(std::span<const std::string> labels_a, std::span<const std::string> labels_b,
             const std::set<std::string>& label_space);

// Two annotators' graphs over one passage. Each graph carries that
// annotator's own variables in its passage copy; sentence ids and texts are
// shared.
struct AnnotationPair {
  Passage passage;
  LogicMetagraph a;
  LogicMetagraph b;
};

// Validates both graphs and the shared sentence universe.
// Throws Error(InvalidGraph) or Error(PairingError).
void check_pair(const AnnotationPair& pair);

// Roles from derive_roles, pooled over every sentence of every passage.
KappaResult kappa_meta_node(std::span<const AnnotationPair> pairs);

// support / rebut / none over ordered sentence pairs, diagonal excluded.
KappaResult kappa_meta_edge(std::span<const AnnotationPair> pairs);

using Tokenizer = std::function<std::vector<CharSpan>(std::string_view)>;

struct VariableAgreement {
  double kappa = 1.0;  // mean of per-passage kappas
  std::vector<double> per_passage;
  std::size_t tokens = 0;
};

// Each token is in or out of some variable span per annotator; one kappa per
// passage, averaged. Throws Error(MissingSpans) when a variable has no span.
VariableAgreement kappa_logical_variable(std::span<const AnnotationPair> pairs,
                                         const Tokenizer& tokenizer = whitespace_tokens);

// entail / and / or / none over ordered variable pairs within each sentence,
// diagonal included. Variables are aligned by span when both annotators
// supply spans, otherwise by id. Throws Error(VariableAlignmentFailure) when
// two variables of one annotator share an alignment key.
KappaResult kappa_logical_relation(std::span<const AnnotationPair> pairs);

nlohmann::json to_json(const KappaResult& result);

}  // namespace metalogic
