#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "metalogic/conllu.hpp"
#include "metalogic/model.hpp"

namespace fixture {

// Sentence whose text is the segments joined by single spaces; each segment
// is the span of the named variable.
metalogic::Sentence sentence(std::string id, const std::vector<std::pair<std::string, std::string>>& segments);

// The four-sentence planet passage and its annotated metagraph.
inline constexpr const char* kPlanetLinearized =
    "$graph$ sent1 -> sent3; sent2 -> sent3; sent4 => sent2;  $formula$ sent3: v2 [and] [necessary] v3;  "
    "$degree$ sent1: contingent | sent2: contingent | sent3: necessary | sent4: contingent";

metalogic::Passage planet_passage();
metalogic::LogicMetagraph planet_graph();

// Five-sentence chain with a rebuttal, global prefixes and a triple-free formula.
metalogic::LogicMetagraph chain_graph();

std::string dir();  // tests/fixtures

// Hand-built parses with hand-derived operator extractions.
struct ExtractorCase {
  metalogic::Sentence sentence;
  metalogic::DependencyParse parse;
  metalogic::ModalPrefix global;
  std::map<std::string, metalogic::ModalPrefix> local;
};

std::vector<ExtractorCase> extractor_cases();

}  // namespace fixture
