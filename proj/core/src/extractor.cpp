#include "metalogic/extractor.hpp"

#include <algorithm>
#include <optional>
#include <set>

#include "metalogic/error.hpp"
#include "metalogic/text.hpp"

namespace metalogic {

namespace {

std::optional<UnaryOp> indicator(const DependencyToken& token, const IndicatorLexicon& lexicon) {
  if (auto op = lexicon.lookup(token.form)) return op;
  // Split clitics ("does" + "n't") carry the full word in the lemma column.
  if (!token.lemma.empty()) return lexicon.lookup(token.lemma);
  return std::nullopt;
}

// Character offsets of each parse token within the sentence text. Without
// text the forms are joined by single spaces.
std::vector<CharSpan> token_offsets(const Sentence& sentence, const DependencyParse& parse) {
  std::string text = sentence.text;
  if (text.empty()) {
    for (const auto& t : parse.tokens) text += (text.empty() ? "" : " ") + t.form;
  }
  auto offsets = whitespace_tokens(text);
  if (offsets.size() != parse.tokens.size())
    throw Error(Errc::ParseMismatch, sentence.id + ": text has " + std::to_string(offsets.size()) +
                                         " tokens, parse has " + std::to_string(parse.tokens.size()));
  return offsets;
}

ModalPrefix ordered_prefix(std::vector<IndicatorMatch>& matches) {
  std::stable_sort(matches.begin(), matches.end(), [](const auto& a, const auto& b) {
    return a.hops != b.hops ? a.hops < b.hops : a.token < b.token;
  });
  ModalPrefix prefix;
  for (const auto& m : matches) prefix.ops.push_back(m.op);
  return prefix;
}

}  // namespace

GlobalExtraction extract_global(const Sentence& sentence, const DependencyParse& parse,
                                const IndicatorLexicon& lexicon) {
  token_offsets(sentence, parse);
  validate_parse(parse);
  GlobalExtraction out;
  for (std::size_t i = 0; i < parse.tokens.size(); ++i) {
    const auto op = indicator(parse.tokens[i], lexicon);
    if (!op) continue;
    const std::size_t hops = parse.hops_to_root(i);
    if (hops <= kMaxIndicatorHops) out.matches.push_back({i, *op, hops, {}});
  }
  out.prefix = ordered_prefix(out.matches);
  return out;
}

std::map<std::string, ModalPrefix> extract_local(const Sentence& sentence, const DependencyParse& parse,
                                                 const IndicatorLexicon& lexicon,
                                                 std::span<const IndicatorMatch> global_matches,
                                                 std::vector<IndicatorMatch>* local_matches) {
  for (const auto& v : sentence.variables)
    if (!v.span) throw Error(Errc::MissingSpans, sentence.id + "/" + v.id + " has no span");
  const auto offsets = token_offsets(sentence, parse);
  validate_parse(parse);

  std::set<std::size_t> consumed;
  for (const auto& m : global_matches) consumed.insert(m.token);

  std::map<std::string, ModalPrefix> out;
  for (const auto& v : sentence.variables) {
    const CharSpan span = *v.span;
    std::vector<bool> inside(parse.tokens.size(), false);
    for (std::size_t i = 0; i < offsets.size(); ++i)
      inside[i] = offsets[i].begin < span.end && span.begin < offsets[i].end;

    // The span's root: an inside token whose head is outside (or the parse
    // root); among several, the one nearest the parse root.
    std::optional<std::size_t> span_root;
    for (std::size_t i = 0; i < parse.tokens.size(); ++i) {
      if (!inside[i]) continue;
      const auto& head = parse.tokens[i].head;
      if (head && inside[*head]) continue;
      if (!span_root || parse.hops_to_root(i) < parse.hops_to_root(*span_root)) span_root = i;
    }

    std::vector<IndicatorMatch> matches;
    if (span_root) {
      for (std::size_t i = 0; i < parse.tokens.size(); ++i) {
        if (!inside[i] || consumed.contains(i)) continue;
        const auto op = indicator(parse.tokens[i], lexicon);
        if (!op) continue;
        // Walk up inside the span; tokens not under the span root are skipped.
        std::size_t hops = 0;
        std::size_t current = i;
        while (current != *span_root) {
          const auto& head = parse.tokens[current].head;
          if (!head || !inside[*head]) break;
          current = *head;
          ++hops;
        }
        if (current == *span_root && hops <= kMaxIndicatorHops) matches.push_back({i, *op, hops, v.id});
      }
    }
    out[v.id] = ordered_prefix(matches);
    for (const auto& m : matches) consumed.insert(m.token);
    if (local_matches) local_matches->insert(local_matches->end(), matches.begin(), matches.end());
  }
  return out;
}

ExtractionResult extract_operators(const Sentence& sentence, const DependencyParse& parse,
                                   const IndicatorLexicon& lexicon) {
  ExtractionResult out;
  auto global = extract_global(sentence, parse, lexicon);
  out.global = std::move(global.prefix);
  out.matched = global.matches;
  std::vector<IndicatorMatch> local;
  out.local = extract_local(sentence, parse, lexicon, global.matches, &local);
  out.matched.insert(out.matched.end(), local.begin(), local.end());
  return out;
}

}  // namespace metalogic
