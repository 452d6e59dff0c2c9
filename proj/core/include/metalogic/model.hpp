#pragma once

// Core value types of a logic metagraph: a passage of statements, the
// support/rebut structure over them, per-statement formulae and certainty.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace metalogic {

enum class UnaryOp : std::uint8_t { Negation, Box, Diamond };

enum class BinaryOp : std::uint8_t { Implication, Conjunction, Disjunction };

enum class EdgeType : std::uint8_t { Support, Rebut };

// Numeric values are the certainty degrees 0..4.
enum class CanonicalDegree : std::uint8_t {
  Impossible = 0,
  Unnecessary = 1,
  Contingent = 2,
  Possible = 3,
  Necessary = 4,
};

inline constexpr CanonicalDegree kAllDegrees[] = {
    CanonicalDegree::Necessary, CanonicalDegree::Possible, CanonicalDegree::Contingent,
    CanonicalDegree::Unnecessary, CanonicalDegree::Impossible};

// A string of unary operators, outermost first: [Box, Negation] reads "□¬p".
struct ModalPrefix {
  std::vector<UnaryOp> ops;

  bool empty() const noexcept { return ops.empty(); }
  std::size_t size() const noexcept { return ops.size(); }
  friend auto operator<=>(const ModalPrefix&, const ModalPrefix&) = default;
};

struct CharSpan {
  std::size_t begin = 0;
  std::size_t end = 0;  // exclusive
  friend auto operator<=>(const CharSpan&, const CharSpan&) = default;
};

struct VariableSpan {
  std::string id;
  std::optional<CharSpan> span;
  friend bool operator==(const VariableSpan&, const VariableSpan&) = default;
};

struct Sentence {
  std::string id;
  std::string text;
  std::vector<VariableSpan> variables;

  const VariableSpan* find_variable(std::string_view variable_id) const;
  friend bool operator==(const Sentence&, const Sentence&) = default;
};

struct Passage {
  std::string id;
  std::vector<Sentence> sentences;

  const Sentence* find(std::string_view sentence_id) const;
  // Position of the sentence in document order, or nullopt.
  std::optional<std::size_t> index_of(std::string_view sentence_id) const;
  friend bool operator==(const Passage&, const Passage&) = default;
};

struct MetaEdge {
  std::string premise;
  std::string conclusion;
  EdgeType kind = EdgeType::Support;
  friend auto operator<=>(const MetaEdge&, const MetaEdge&) = default;
};

struct Operand {
  std::string variable;
  ModalPrefix prefix;
  friend auto operator<=>(const Operand&, const Operand&) = default;
};

struct LogicalTriple {
  Operand left;
  BinaryOp op = BinaryOp::Conjunction;
  Operand right;
  friend auto operator<=>(const LogicalTriple&, const LogicalTriple&) = default;
};

// Triples are implicitly conjoined; `global` scopes over the whole statement.
struct Formula {
  std::string sentence;
  std::vector<LogicalTriple> triples;
  ModalPrefix global;
  friend bool operator==(const Formula&, const Formula&) = default;
};

struct LogicMetagraph {
  Passage passage;
  std::vector<MetaEdge> edges;
  std::vector<Formula> formulae;
  std::map<std::string, CanonicalDegree> degrees;

  const Formula* formula_for(std::string_view sentence_id) const;
  friend bool operator==(const LogicMetagraph&, const LogicMetagraph&) = default;
};

// Equal up to edge order and formula order (triple order still matters).
bool structurally_equal(const LogicMetagraph& a, const LogicMetagraph& b);

// ---------------------------------------------------------------------------
// Validation

enum class ViolationCode {
  Cycle,
  DanglingEdge,
  DupFormula,
  BadSpan,
  SelfLoop,
  MissingDegree,
  DupEdge,
  DupSentence,
  DupVariable,
  EmptyPassage,
  UnknownSentence,
  UnknownVariable,
  SameVariable,
};

std::string_view violation_name(ViolationCode code);

struct Violation {
  ViolationCode code;
  std::string subject;  // ids involved, e.g. "sent1->sent2" or "sent3/v2"
  std::string message;
  friend auto operator<=>(const Violation&, const Violation&) = default;
};

using ValidationReport = std::vector<Violation>;

// Every structural invariant violation, sorted; empty means valid.
ValidationReport validate_graph(const LogicMetagraph& graph);

inline bool is_valid(const LogicMetagraph& graph) { return validate_graph(graph).empty(); }

// Throws Error(InvalidGraph) listing the violations.
void require_valid(const LogicMetagraph& graph);

// ---------------------------------------------------------------------------
// Derived structure

enum class Role : std::uint8_t { Conclusion, Rebuttal, ChainBeginning, Intermediate, Irrelevant };

std::string_view role_name(Role role);

// One role per passage sentence. Precedence when several apply:
// Rebuttal > Conclusion > Intermediate > ChainBeginning.
std::map<std::string, Role> derive_roles(const LogicMetagraph& graph);

struct Step {
  std::string premise;
  std::string conclusion;
  EdgeType kind = EdgeType::Support;
  friend auto operator<=>(const Step&, const Step&) = default;
};

// One-premise steps; a multi-premise inference contributes one step per premise.
std::set<Step> decompose_steps(const LogicMetagraph& graph);

// Sentence ids that take part in at least one edge.
std::set<std::string> participating_sentences(const LogicMetagraph& graph);

}  // namespace metalogic
