#pragma once

// Dependency parses read from the 10-column CoNLL-U interchange format.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace metalogic {

struct DependencyToken {
  std::string form;
  std::string lemma;               // empty when the column is "_"
  std::optional<std::size_t> head;  // 0-based; nullopt for the root
  std::string relation;
};

struct DependencyParse {
  std::string sent_id;  // from "# sent_id = ..." when present
  std::string text;     // from "# text = ..." when present
  std::vector<DependencyToken> tokens;

  std::size_t root() const;
  // Head edges from the token up to the root; the root itself is 0.
  std::size_t hops_to_root(std::size_t token) const;
};

// Head indices in range, exactly one root, no head cycles.
// Throws Error(MultipleRoots) or Error(MalformedRow).
void validate_parse(const DependencyParse& parse);

// One parse per blank-line separated block. Multiword ranges ("3-4") and
// empty nodes ("5.1") are skipped. Throws Error(MalformedRow) with the line
// number, or Error(MultipleRoots).
std::vector<DependencyParse> ingest_conllu(std::string_view text);

}  // namespace metalogic
