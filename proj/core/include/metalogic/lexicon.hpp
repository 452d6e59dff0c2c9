#pragma once

#include <filesystem>
#include <optional>
#include <set>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "metalogic/model.hpp"

namespace metalogic {

// Clue words for the unary operators. Entries are lowercase and the three
// sets are pairwise disjoint.
struct IndicatorLexicon {
  std::set<std::string> negation;
  std::set<std::string> box;
  std::set<std::string> diamond;

  // Case-insensitive.
  std::optional<UnaryOp> lookup(std::string_view word) const;

  // Throws Error(OverlappingLexicon) or Error(SchemaViolation) for uppercase
  // or empty entries.
  void validate() const;

  // The standard indicator table.
  static IndicatorLexicon defaults();
};

// Three sections introduced by "[negation]", "[box]" and "[diamond]", one
// word per line; '#' starts a comment.
IndicatorLexicon parse_lexicon_text(std::string_view text);

// {"negation": [...], "box": [...], "diamond": [...]}
IndicatorLexicon lexicon_from_json(const nlohmann::json& doc);

// By extension: .json, anything else as text. Throws Error(Io).
IndicatorLexicon load_lexicon(const std::filesystem::path& path);

std::string to_lower(std::string_view s);

}  // namespace metalogic
