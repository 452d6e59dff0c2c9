#include "fixtures.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "metalogic/operator_words.hpp"
#include "metalogic/text.hpp"

namespace fixture {

using namespace metalogic;

Sentence sentence(std::string id, const std::vector<std::pair<std::string, std::string>>& segments) {
  Sentence s;
  s.id = std::move(id);
  for (const auto& [var, text] : segments) {
    if (!s.text.empty()) s.text += ' ';
    const std::size_t begin = s.text.size();
    s.text += text;
    s.variables.push_back({var, CharSpan{begin, s.text.size()}});
  }
  return s;
}

Passage planet_passage() {
  return {"planet",
          {sentence("sent1", {{"v1", "measurements of the motion of the planet uranus seem to show uranus being "
                                     "tugged by a force pulling it away from the sun and the inner planets ."}}),
           sentence("sent2", {{"v1", "neptune and pluto ,"},
                              {"v2", "the two known planets whose orbits are farther from the sun than is the "
                                     "orbit of uranus ,"},
                              {"v3", "do not have enough mass to exert the force that the measurements indicate ."}}),
           sentence("sent3", {{"v1", "therefore ,"},
                              {"v2", "in addition to the known planets ,"},
                              {"v3", "there must be at least one planet in our solar system that we have yet to "
                                     "discover ."}}),
           sentence("sent4", {{"v1", "there is a belt of comets beyond the orbit of pluto with powerful "
                                     "gravitational pull ."}})}};
}

LogicMetagraph planet_graph() {
  LogicMetagraph g;
  g.passage = planet_passage();
  g.edges = {{"sent1", "sent3", EdgeType::Support},
             {"sent2", "sent3", EdgeType::Support},
             {"sent4", "sent2", EdgeType::Rebut}};
  g.formulae = {{"sent3", {{{"v2", {}}, BinaryOp::Conjunction, {"v3", {{UnaryOp::Box}}}}}, {}}};
  g.degrees = {{"sent1", CanonicalDegree::Contingent},
               {"sent2", CanonicalDegree::Contingent},
               {"sent3", CanonicalDegree::Necessary},
               {"sent4", CanonicalDegree::Contingent}};
  return g;
}

LogicMetagraph chain_graph() {
  using enum UnaryOp;
  LogicMetagraph g;
  g.passage = {"chain",
               {sentence("sent1", {{"v1", "the river flooded"}}),
                sentence("sent2", {{"v1", "the bridge did not close"}, {"v2", "traffic may have stopped"}}),
                sentence("sent3", {{"v1", "deliveries were late"},
                                   {"v2", "shops ran short"},
                                   {"v3", "prices were not certainly higher"}}),
                sentence("sent4", {{"v1", "the rail line was also down"}}),
                sentence("sent5", {{"v1", "perhaps the river never rose"}})}};
  g.edges = {{"sent1", "sent2", EdgeType::Support},
             {"sent2", "sent3", EdgeType::Support},
             {"sent4", "sent3", EdgeType::Support},
             {"sent5", "sent1", EdgeType::Rebut}};
  g.formulae = {
      {"sent2", {{{"v1", {{Negation}}}, BinaryOp::Implication, {"v2", {{Diamond}}}}}, {{Negation}}},
      {"sent3",
       {{{"v1", {}}, BinaryOp::Conjunction, {"v2", {}}},
        {{"v2", {}}, BinaryOp::Disjunction, {"v3", {{Negation, Box}}}}},
       {{Box, Diamond}}},
      {"sent5", {}, {{Diamond}}},
  };
  for (const auto& s : g.passage.sentences) g.degrees[s.id] = CanonicalDegree::Contingent;
  g.degrees["sent3"] = CanonicalDegree::Possible;
  return g;
}

std::string dir() { return METALOGIC_FIXTURE_DIR; }

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("missing fixture " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ModalPrefix words_to_prefix(const nlohmann::json& words) {
  ModalPrefix p;
  for (const auto& w : words) p.ops.push_back(std::get<UnaryOp>(*operator_from_word(w.get<std::string>())));
  return p;
}

}  // namespace

std::vector<ExtractorCase> extractor_cases() {
  const auto parses = ingest_conllu(slurp(dir() + "/extractor/parses.conllu"));
  const auto expected = nlohmann::json::parse(slurp(dir() + "/extractor/expected.json"));
  std::vector<ExtractorCase> out;
  for (const auto& parse : parses) {
    const auto& e = expected.at(parse.sent_id);
    ExtractorCase c;
    c.parse = parse;
    c.sentence.id = parse.sent_id;
    c.sentence.text = parse.text;
    const auto tokens = whitespace_tokens(parse.text);
    for (const auto& [var, range] : e.at("variables").items())
      c.sentence.variables.push_back(
          {var, CharSpan{tokens.at(range[0].get<std::size_t>()).begin, tokens.at(range[1].get<std::size_t>()).end}});
    c.global = words_to_prefix(e.at("global"));
    for (const auto& [var, words] : e.at("local").items()) c.local[var] = words_to_prefix(words);
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace fixture
