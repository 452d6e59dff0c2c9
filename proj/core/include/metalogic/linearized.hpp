#pragma once

// The linearized text form of a metagraph:
//
//   $graph$ sent1 -> sent3; sent2 -> sent3; sent4 => sent2;
//   $formula$ sent3: v2 [and] [necessary] v3;
//   $degree$ sent1: contingent | sent2: contingent | sent3: necessary | sent4: contingent
//
// "->" is support, "=>" is rebut. Formula groups of different sentences are
// joined by "|"; triples of one group end with ";". Bracket words that
// precede a group's "sentN:" label form that formula's global prefix.

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "metalogic/model.hpp"

namespace metalogic {

enum class ParseMode { Strict, Lenient };

std::string_view mode_name(ParseMode mode);

enum class DiagCode {
  Syntax,
  UnknownId,
  UnknownOperator,
  UnresolvedDegree,
  MalformedEdge,
  MissingSection,
  DuplicateEntry,
};

std::string_view diag_name(DiagCode code);

struct Diagnostic {
  std::size_t position = 0;  // byte offset into the parsed text
  DiagCode code = DiagCode::Syntax;
  std::string message;
};

struct ParseOutcome {
  // Absent only for a Strict parse that hit a diagnostic.
  std::optional<LogicMetagraph> graph;
  std::vector<Diagnostic> diagnostics;
  ParseMode mode = ParseMode::Strict;
  // Sentences whose degree word could not be resolved; they carry no degree.
  std::set<std::string> unresolved_degrees;

  bool clean() const { return graph.has_value() && diagnostics.empty(); }
};

// Ids are resolved against `passage`; unknown ids are diagnosed, never added.
ParseOutcome parse_linearized(std::string_view text, const Passage& passage, ParseMode mode);

// Without a passage the sentence and variable universe is taken from the text
// itself, ordered naturally (sent2 before sent10).
ParseOutcome parse_linearized(std::string_view text, ParseMode mode, std::string passage_id = {});

// Throws Error(InvalidGraph). Edges keep their stored order; formulae and
// degrees follow passage sentence order.
std::string serialize_linearized(const LogicMetagraph& graph);

std::string serialize_triple(const LogicalTriple& triple);

// Parses "[g..] sentN: t1; t2" or a bare "t1; t2" with free variable ids.
// Throws Error(Syntax) on the first malformed token.
Formula parse_formula_text(std::string_view text);

// Collapses whitespace runs and trims; ';' and ':' get no blank before and
// one after.
std::string normalize_whitespace(std::string_view text);

// "sent2" < "sent10": digit runs compare numerically.
bool natural_less(std::string_view a, std::string_view b);

}  // namespace metalogic
