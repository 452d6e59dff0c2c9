#include "metalogic/lexicon.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "metalogic/error.hpp"

namespace metalogic {

std::string to_lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

std::optional<UnaryOp> IndicatorLexicon::lookup(std::string_view word) const {
  const std::string w = to_lower(word);
  if (negation.contains(w)) return UnaryOp::Negation;
  if (box.contains(w)) return UnaryOp::Box;
  if (diamond.contains(w)) return UnaryOp::Diamond;
  return std::nullopt;
}

void IndicatorLexicon::validate() const {
  const std::pair<const char*, const std::set<std::string>*> rows[] = {
      {"negation", &negation}, {"box", &box}, {"diamond", &diamond}};
  for (const auto& [name, words] : rows) {
    for (const auto& w : *words) {
      if (w.empty() || w != to_lower(w))
        throw Error(Errc::SchemaViolation, std::string("lexicon entry '") + w + "' in " + name + " must be lowercase");
    }
  }
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = i + 1; j < 3; ++j) {
      for (const auto& w : *rows[i].second) {
        if (rows[j].second->contains(w))
          throw Error(Errc::OverlappingLexicon,
                      "'" + w + "' is listed under both " + rows[i].first + " and " + rows[j].first);
      }
    }
  }
}

IndicatorLexicon IndicatorLexicon::defaults() {
  IndicatorLexicon lex;
  lex.negation = {"no",       "not",       "none",    "nobody", "nothing",  "neither",
                  "nor",      "nowhere",   "never",   "hardly", "scarcely", "barely",
                  "doesn't",  "isn't",     "wasn't",  "shouldn't", "wouldn't", "couldn't",
                  "won't",    "can't",     "don't",   "impossible"};
  lex.box = {"necessarily", "must", "definitely", "certainly", "clearly", "obviously",
             "undoubtedly", "surely", "will", "all", "every", "always"};
  lex.diamond = {"likely",  "approximately", "possibly",   "perhaps",   "probably",   "maybe",
                 "few",     "may",           "might",      "could",     "many",       "most",
                 "some",    "numerous",      "countless",  "majority",  "often",      "frequently",
                 "commonly", "usually",      "sometimes",  "repeatedly", "appears",   "seems",
                 "suggests", "indicates"};
  return lex;
}

IndicatorLexicon parse_lexicon_text(std::string_view text) {
  IndicatorLexicon lex;
  std::set<std::string>* section = nullptr;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const auto b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos) continue;
    const auto e = line.find_last_not_of(" \t\r");
    const std::string word = line.substr(b, e - b + 1);
    if (word == "[negation]") {
      section = &lex.negation;
    } else if (word == "[box]") {
      section = &lex.box;
    } else if (word == "[diamond]") {
      section = &lex.diamond;
    } else if (!section) {
      throw Error(Errc::SchemaViolation, "lexicon line " + std::to_string(number) + ": entry before any section");
    } else {
      section->insert(word);
    }
  }
  lex.validate();
  return lex;
}

IndicatorLexicon lexicon_from_json(const nlohmann::json& doc) {
  if (!doc.is_object()) throw Error(Errc::SchemaViolation, "at /: lexicon must be an object");
  IndicatorLexicon lex;
  for (const auto& [key, target] : {std::pair{"negation", &lex.negation}, std::pair{"box", &lex.box},
                                    std::pair{"diamond", &lex.diamond}}) {
    const auto it = doc.find(key);
    if (it == doc.end() || !it->is_array())
      throw Error(Errc::SchemaViolation, std::string("at /") + key + ": expected an array of words");
    for (const auto& w : *it) {
      if (!w.is_string()) throw Error(Errc::SchemaViolation, std::string("at /") + key + ": expected strings");
      target->insert(w.get<std::string>());
    }
  }
  lex.validate();
  return lex;
}

IndicatorLexicon load_lexicon(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::Io, "cannot open lexicon '" + path.string() + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  if (path.extension() == ".json") {
    try {
      return lexicon_from_json(nlohmann::json::parse(buffer.str()));
    } catch (const nlohmann::json::parse_error&) {
      throw Error(Errc::SchemaViolation, "lexicon '" + path.string() + "' is not valid JSON");
    }
  }
  return parse_lexicon_text(buffer.str());
}

}  // namespace metalogic
