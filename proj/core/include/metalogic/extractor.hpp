#pragma once

// Rule-based unary-operator extraction. Lexicon words within three head-hops
// of the parse root become the global prefix, nearest-to-root first. Words
// inside a variable span, within three hops of the span's own root and not
// already used globally, become that variable's local prefix.

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "metalogic/conllu.hpp"
#include "metalogic/lexicon.hpp"
#include "metalogic/model.hpp"

namespace metalogic {

inline constexpr std::size_t kMaxIndicatorHops = 3;

struct IndicatorMatch {
  std::size_t token = 0;  // 0-based parse index
  UnaryOp op = UnaryOp::Negation;
  std::size_t hops = 0;
  std::string variable;  // empty for global matches
  friend bool operator==(const IndicatorMatch&, const IndicatorMatch&) = default;
};

struct GlobalExtraction {
  ModalPrefix prefix;
  std::vector<IndicatorMatch> matches;
};

struct ExtractionResult {
  ModalPrefix global;
  std::map<std::string, ModalPrefix> local;
  std::vector<IndicatorMatch> matched;  // global matches first, then local
};

// Ties in hop distance go to the earlier token. Throws Error(ParseMismatch)
// when the sentence text and the parse disagree on the token count.
GlobalExtraction extract_global(const Sentence& sentence, const DependencyParse& parse,
                                const IndicatorLexicon& lexicon);

// Throws Error(MissingSpans) when a variable has no span.
std::map<std::string, ModalPrefix> extract_local(const Sentence& sentence, const DependencyParse& parse,
                                                 const IndicatorLexicon& lexicon,
                                                 std::span<const IndicatorMatch> global_matches,
                                                 std::vector<IndicatorMatch>* local_matches = nullptr);

ExtractionResult extract_operators(const Sentence& sentence, const DependencyParse& parse,
                                   const IndicatorLexicon& lexicon);

}  // namespace metalogic
