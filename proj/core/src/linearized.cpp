#include "metalogic/linearized.hpp"

#include <algorithm>
#include <cctype>
#include <map>

#include "metalogic/error.hpp"
#include "metalogic/operator_words.hpp"

namespace metalogic {

std::string_view mode_name(ParseMode mode) {
  return mode == ParseMode::Strict ? "strict" : "lenient";
}

std::string_view diag_name(DiagCode code) {
  switch (code) {
    case DiagCode::Syntax: return "SYNTAX";
    case DiagCode::UnknownId: return "UNKNOWN_ID";
    case DiagCode::UnknownOperator: return "UNKNOWN_OPERATOR";
    case DiagCode::UnresolvedDegree: return "UNRESOLVED_DEGREE";
    case DiagCode::MalformedEdge: return "MALFORMED_EDGE";
    case DiagCode::MissingSection: return "MISSING_SECTION";
    case DiagCode::DuplicateEntry: return "DUPLICATE_ENTRY";
  }
  return "UNKNOWN";
}

bool natural_less(std::string_view a, std::string_view b) {
  std::size_t i = 0, j = 0;
  auto digit = [](char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; };
  while (i < a.size() && j < b.size()) {
    if (digit(a[i]) && digit(b[j])) {
      std::size_t ei = i, ej = j;
      while (ei < a.size() && digit(a[ei])) ++ei;
      while (ej < b.size() && digit(b[ej])) ++ej;
      auto na = a.substr(i, ei - i), nb = b.substr(j, ej - j);
      while (na.size() > 1 && na.front() == '0') na.remove_prefix(1);
      while (nb.size() > 1 && nb.front() == '0') nb.remove_prefix(1);
      if (na.size() != nb.size()) return na.size() < nb.size();
      if (na != nb) return na < nb;
      i = ei;
      j = ej;
    } else {
      if (a[i] != b[j]) return a[i] < b[j];
      ++i;
      ++j;
    }
  }
  if ((a.size() - i) != (b.size() - j)) return (a.size() - i) < (b.size() - j);
  return a < b;
}

std::string normalize_whitespace(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  bool pending_space = false;
  for (const char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space && c != ';' && c != ':') out += ' ';
    out += c;
    pending_space = c == ';' || c == ':';
  }
  return out;
}

// ---------------------------------------------------------------------------
// Tokens

namespace {

enum class Tok { Marker, Arrow, Semi, Bar, Colon, Bracket, Word, Garbage };

struct Token {
  Tok kind;
  std::string text;  // marker name, arrow, bracket content, or word
  std::size_t pos;
};

bool is_break(char c) {
  return std::isspace(static_cast<unsigned char>(c)) || c == ';' || c == '|' || c == ':' ||
         c == '[' || c == ']' || c == '$';
}

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if (c == ';') {
      out.push_back({Tok::Semi, ";", start});
      ++i;
    } else if (c == '|') {
      out.push_back({Tok::Bar, "|", start});
      ++i;
    } else if (c == ':') {
      out.push_back({Tok::Colon, ":", start});
      ++i;
    } else if ((c == '-' || c == '=') && i + 1 < s.size() && s[i + 1] == '>') {
      out.push_back({Tok::Arrow, std::string(s.substr(i, 2)), start});
      i += 2;
    } else if (c == '[') {
      const auto close = s.find(']', i + 1);
      const auto next_open = s.find('[', i + 1);
      if (close == std::string_view::npos || (next_open != std::string_view::npos && next_open < close)) {
        out.push_back({Tok::Garbage, "[", start});
        ++i;
      } else {
        out.push_back({Tok::Bracket, std::string(s.substr(i + 1, close - i - 1)), start});
        i = close + 1;
      }
    } else if (c == '$') {
      const auto close = s.find('$', i + 1);
      if (close == std::string_view::npos) {
        out.push_back({Tok::Garbage, "$", start});
        ++i;
      } else {
        out.push_back({Tok::Marker, std::string(s.substr(i + 1, close - i - 1)), start});
        i = close + 1;
      }
    } else if (c == ']') {
      out.push_back({Tok::Garbage, "]", start});
      ++i;
    } else {
      while (i < s.size() && !is_break(s[i])) {
        if ((s[i] == '-' || s[i] == '=') && i + 1 < s.size() && s[i + 1] == '>') break;
        ++i;
      }
      out.push_back({Tok::Word, std::string(s.substr(start, i - start)), start});
    }
  }
  return out;
}

using Span = std::vector<Token>;

std::vector<Span> split_on(const Span& tokens, Tok separator) {
  std::vector<Span> parts(1);
  for (const auto& t : tokens) {
    if (t.kind == separator)
      parts.emplace_back();
    else
      parts.back().push_back(t);
  }
  return parts;
}

// Signals that a strict parse must stop.
struct StrictAbort {};

// Which ids exist. A fixed passage rejects unknown ids; an open universe
// records every id it sees.
class Universe {
 public:
  explicit Universe(const Passage* passage) : passage_(passage) {}

  bool has_sentence(const std::string& id) {
    if (passage_) return passage_->find(id) != nullptr;
    sentences_[id];
    return true;
  }

  bool has_variable(const std::string& sentence, const std::string& variable) {
    if (passage_) {
      const Sentence* s = passage_->find(sentence);
      return s && s->find_variable(variable);
    }
    sentences_[sentence].insert(variable);
    return true;
  }

  Passage build(std::string id) const {
    if (passage_) return *passage_;
    Passage p{std::move(id), {}};
    for (const auto& [sid, vars] : sentences_) {
      Sentence s{sid, {}, {}};
      for (const auto& v : vars) s.variables.push_back({v, std::nullopt});
      std::sort(s.variables.begin(), s.variables.end(),
                [](const auto& a, const auto& b) { return natural_less(a.id, b.id); });
      p.sentences.push_back(std::move(s));
    }
    std::sort(p.sentences.begin(), p.sentences.end(),
              [](const auto& a, const auto& b) { return natural_less(a.id, b.id); });
    return p;
  }

 private:
  const Passage* passage_;
  std::map<std::string, std::set<std::string>> sentences_;
};

class Parser {
 public:
  Parser(ParseMode mode, Universe universe) : mode_(mode), universe_(std::move(universe)) {}

  ParseOutcome run(std::string_view text, std::string passage_id) {
    ParseOutcome outcome;
    outcome.mode = mode_;
    try {
      parse_document(tokenize(text), text.size());
    } catch (const StrictAbort&) {
      outcome.diagnostics = std::move(diagnostics_);
      return outcome;
    }
    LogicMetagraph graph;
    graph.passage = universe_.build(std::move(passage_id));
    graph.edges = std::move(edges_);
    graph.formulae = std::move(formulae_);
    graph.degrees = std::move(degrees_);
    outcome.graph = std::move(graph);
    outcome.diagnostics = std::move(diagnostics_);
    outcome.unresolved_degrees = std::move(unresolved_);
    return outcome;
  }

  // Formula text outside a document: "[g] sentN: t; t" or "t; t".
  Formula run_formula(std::string_view text) {
    const Span tokens = tokenize(text);
    bool labelled = std::any_of(tokens.begin(), tokens.end(),
                                [](const Token& t) { return t.kind == Tok::Colon; });
    if (!labelled) {
      formulae_.push_back({});
      current_ = 0;
    }
    try {
      parse_formula_section(tokens, text.size());
    } catch (const StrictAbort&) {
      const auto& d = diagnostics_.front();
      throw Error(Errc::Syntax, "at " + std::to_string(d.position) + ": " + d.message);
    }
    if (formulae_.empty()) throw Error(Errc::Syntax, "no formula found");
    if (formulae_.size() > 1) throw Error(Errc::Syntax, "more than one formula group");
    return formulae_.front();
  }

 private:
  void diagnose(std::size_t pos, DiagCode code, std::string message) {
    diagnostics_.push_back({pos, code, std::move(message)});
    if (mode_ == ParseMode::Strict) throw StrictAbort{};
  }

  static std::size_t pos_of(const Span& span, std::size_t fallback) {
    return span.empty() ? fallback : span.front().pos;
  }

  void parse_document(const Span& tokens, std::size_t end) {
    // Partition into sections by marker.
    enum Section { None, Graph, FormulaSec, Degree };
    std::map<Section, Span> sections;
    std::map<Section, bool> seen;
    Section current = None;
    int order = 0;
    for (const auto& t : tokens) {
      if (t.kind == Tok::Marker) {
        Section next = None;
        int rank = 0;
        if (t.text == "graph") {
          next = Graph;
          rank = 1;
        } else if (t.text == "formula") {
          next = FormulaSec;
          rank = 2;
        } else if (t.text == "degree") {
          next = Degree;
          rank = 3;
        } else {
          diagnose(t.pos, DiagCode::Syntax, "unknown section marker $" + t.text + "$");
          continue;
        }
        if (seen[next]) {
          diagnose(t.pos, DiagCode::Syntax, "section $" + t.text + "$ repeated");
        } else if (rank < order) {
          diagnose(t.pos, DiagCode::Syntax, "section $" + t.text + "$ out of order");
        }
        seen[next] = true;
        order = std::max(order, rank);
        current = next;
        continue;
      }
      sections[current].push_back(t);
    }

    if (!sections[None].empty()) {
      diagnose(sections[None].front().pos, DiagCode::MissingSection,
               "text before the first section marker; read as graph edges");
      auto& g = sections[Graph];
      g.insert(g.begin(), sections[None].begin(), sections[None].end());
    }
    for (const auto& [section, name] :
         {std::pair{Graph, "graph"}, std::pair{FormulaSec, "formula"}, std::pair{Degree, "degree"}}) {
      if (!seen[section])
        diagnose(end, DiagCode::MissingSection, std::string("missing $") + name + "$ section");
    }

    parse_graph_section(sections[Graph], end);
    parse_formula_section(sections[FormulaSec], end);
    parse_degree_section(sections[Degree], end);
  }

  void parse_graph_section(const Span& tokens, std::size_t end) {
    for (const auto& clause : split_on(tokens, Tok::Semi)) {
      if (clause.empty()) continue;
      const std::size_t pos = pos_of(clause, end);
      const auto arrows = std::count_if(clause.begin(), clause.end(),
                                        [](const Token& t) { return t.kind == Tok::Arrow; });
      if (arrows == 0) {
        diagnose(pos, DiagCode::MalformedEdge, "edge clause has no arrow");
        continue;
      }
      if (clause.size() != 3 || clause[0].kind != Tok::Word || clause[1].kind != Tok::Arrow ||
          clause[2].kind != Tok::Word) {
        diagnose(pos, mode_ == ParseMode::Strict ? DiagCode::Syntax : DiagCode::MalformedEdge,
                 "expected '<sentence> -> <sentence>'");
        continue;
      }
      bool known = true;
      for (const Token* t : {&clause[0], &clause[2]}) {
        if (!universe_.has_sentence(t->text)) {
          diagnose(t->pos, DiagCode::UnknownId, "unknown sentence '" + t->text + "'");
          known = false;
        }
      }
      if (!known) continue;
      const EdgeType kind = clause[1].text == "->" ? EdgeType::Support : EdgeType::Rebut;
      edges_.push_back({clause[0].text, clause[2].text, kind});
    }
  }

  // Reads leading unary bracket words; returns false after diagnosing.
  bool read_prefix(const Span& tokens, std::size_t& i, ModalPrefix& prefix) {
    while (i < tokens.size() && tokens[i].kind == Tok::Bracket) {
      const auto op = operator_from_word(tokens[i].text);
      if (!op) {
        diagnose(tokens[i].pos, DiagCode::UnknownOperator, "unknown operator [" + tokens[i].text + "]");
        return false;
      }
      const auto* unary = std::get_if<UnaryOp>(&*op);
      if (!unary) return true;  // a binary word ends the prefix
      prefix.ops.push_back(*unary);
      ++i;
    }
    return true;
  }

  std::optional<LogicalTriple> read_triple(const Span& clause, std::size_t end, const std::string& sentence) {
    LogicalTriple triple;
    std::size_t i = 0;
    const std::size_t pos = pos_of(clause, end);
    auto operand = [&](Operand& out) -> bool {
      if (!read_prefix(clause, i, out.prefix)) return false;
      if (i >= clause.size() || clause[i].kind != Tok::Word) {
        diagnose(i < clause.size() ? clause[i].pos : pos, DiagCode::Syntax, "expected a variable");
        return false;
      }
      out.variable = clause[i++].text;
      return true;
    };
    if (!operand(triple.left)) return std::nullopt;
    if (i >= clause.size() || clause[i].kind != Tok::Bracket) {
      diagnose(i < clause.size() ? clause[i].pos : pos, DiagCode::Syntax, "expected a binary operator");
      return std::nullopt;
    }
    const auto op = operator_from_word(clause[i].text);
    if (!op) {
      diagnose(clause[i].pos, DiagCode::UnknownOperator, "unknown operator [" + clause[i].text + "]");
      return std::nullopt;
    }
    const auto* binary = std::get_if<BinaryOp>(&*op);
    if (!binary) {
      diagnose(clause[i].pos, DiagCode::Syntax, "expected a binary operator");
      return std::nullopt;
    }
    triple.op = *binary;
    ++i;
    if (!operand(triple.right)) return std::nullopt;
    if (i != clause.size()) {
      diagnose(clause[i].pos, DiagCode::Syntax, "unexpected token after triple");
      return std::nullopt;
    }
    bool known = true;
    for (const Operand* side : {&triple.left, &triple.right}) {
      if (!sentence.empty() && !universe_.has_variable(sentence, side->variable)) {
        diagnose(pos, DiagCode::UnknownId, "unknown variable '" + side->variable + "' in " + sentence);
        known = false;
      }
    }
    if (!known) return std::nullopt;
    return triple;
  }

  // Index of the ':' if the clause opens with "[..]* <word> :".
  static std::optional<std::size_t> label_colon(const Span& clause) {
    std::size_t i = 0;
    while (i < clause.size() && clause[i].kind == Tok::Bracket) ++i;
    if (i + 1 < clause.size() && clause[i].kind == Tok::Word && clause[i + 1].kind == Tok::Colon)
      return i + 1;
    return std::nullopt;
  }

  void parse_formula_section(const Span& tokens, std::size_t end) {
    for (const auto& group : split_on(tokens, Tok::Bar)) {
      for (auto clause : split_on(group, Tok::Semi)) {
        if (clause.empty()) continue;
        if (const auto colon = label_colon(clause)) {
          std::size_t i = 0;
          ModalPrefix global;
          if (!read_prefix(clause, i, global)) {
            current_.reset();
            continue;
          }
          if (i != *colon - 1) {
            diagnose(clause[i].pos, DiagCode::Syntax, "binary operator before sentence label");
            current_.reset();
            continue;
          }
          const Token& label = clause[*colon - 1];
          if (!universe_.has_sentence(label.text)) {
            diagnose(label.pos, DiagCode::UnknownId, "unknown sentence '" + label.text + "'");
            current_.reset();
            continue;
          }
          formulae_.push_back({label.text, {}, std::move(global)});
          current_ = formulae_.size() - 1;
          clause.erase(clause.begin(), clause.begin() + static_cast<std::ptrdiff_t>(*colon + 1));
          if (clause.empty()) continue;
        }
        if (!current_) {
          diagnose(pos_of(clause, end), DiagCode::Syntax, "triple without a sentence label");
          continue;
        }
        Formula& formula = formulae_[*current_];
        if (auto triple = read_triple(clause, end, formula.sentence))
          formula.triples.push_back(std::move(*triple));
      }
      current_.reset();
    }
  }

  void parse_degree_section(const Span& tokens, std::size_t end) {
    auto entries = split_on(tokens, Tok::Bar);
    if (mode_ == ParseMode::Lenient) {
      std::vector<Span> finer;
      for (const auto& e : entries)
        for (auto& part : split_on(e, Tok::Semi)) finer.push_back(std::move(part));
      entries = std::move(finer);
    }
    for (const auto& entry : entries) {
      if (entry.empty()) continue;
      if (entry.size() != 3 || entry[0].kind != Tok::Word || entry[1].kind != Tok::Colon ||
          entry[2].kind != Tok::Word) {
        diagnose(pos_of(entry, end), DiagCode::Syntax, "expected '<sentence>: <degree>'");
        continue;
      }
      const std::string& id = entry[0].text;
      if (!universe_.has_sentence(id)) {
        diagnose(entry[0].pos, DiagCode::UnknownId, "unknown sentence '" + id + "'");
        continue;
      }
      if (degrees_.contains(id) || unresolved_.contains(id)) {
        diagnose(entry[0].pos, DiagCode::DuplicateEntry, "second degree for '" + id + "'");
        continue;
      }
      const auto degree = degree_from_word(entry[2].text);
      if (!degree) {
        unresolved_.insert(id);
        diagnose(entry[2].pos, DiagCode::UnresolvedDegree,
                 "unresolved degree '" + entry[2].text + "' for " + id);
        continue;
      }
      degrees_.emplace(id, *degree);
    }
  }

  ParseMode mode_;
  Universe universe_;
  std::vector<Diagnostic> diagnostics_;
  std::vector<MetaEdge> edges_;
  std::vector<Formula> formulae_;
  std::map<std::string, CanonicalDegree> degrees_;
  std::set<std::string> unresolved_;
  std::optional<std::size_t> current_;
};

}  // namespace

ParseOutcome parse_linearized(std::string_view text, const Passage& passage, ParseMode mode) {
  return Parser(mode, Universe(&passage)).run(text, passage.id);
}

ParseOutcome parse_linearized(std::string_view text, ParseMode mode, std::string passage_id) {
  return Parser(mode, Universe(nullptr)).run(text, std::move(passage_id));
}

Formula parse_formula_text(std::string_view text) {
  return Parser(ParseMode::Strict, Universe(nullptr)).run_formula(text);
}

std::string serialize_triple(const LogicalTriple& triple) {
  std::string out;
  auto operand = [&out](const Operand& o) {
    const std::string words = prefix_words(o.prefix);
    if (!words.empty()) out += words + ' ';
    out += o.variable;
  };
  operand(triple.left);
  out += " [";
  out += word_of(triple.op);
  out += "] ";
  operand(triple.right);
  return out;
}

std::string serialize_linearized(const LogicMetagraph& graph) {
  require_valid(graph);
  std::string out = "$graph$";
  for (const auto& e : graph.edges) {
    out += ' ';
    out += e.premise;
    out += ' ';
    out += edge_arrow(e.kind);
    out += ' ';
    out += e.conclusion;
    out += ';';
  }

  out += " $formula$";
  bool first = true;
  for (const auto& s : graph.passage.sentences) {
    const Formula* f = graph.formula_for(s.id);
    if (!f) continue;
    out += first ? " " : " | ";
    first = false;
    if (!f->global.empty()) out += prefix_words(f->global) + ' ';
    out += f->sentence;
    out += ':';
    for (const auto& t : f->triples) {
      out += ' ';
      out += serialize_triple(t);
      out += ';';
    }
  }

  out += " $degree$";
  first = true;
  for (const auto& s : graph.passage.sentences) {
    const auto it = graph.degrees.find(s.id);
    if (it == graph.degrees.end()) continue;
    out += first ? " " : " | ";
    first = false;
    out += s.id;
    out += ": ";
    out += degree_word(it->second);
  }
  return out;
}

}  // namespace metalogic
