#include "metalogic/model.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <unordered_map>

#include "metalogic/error.hpp"

namespace metalogic {

const VariableSpan* Sentence::find_variable(std::string_view variable_id) const {
  for (const auto& v : variables)
    if (v.id == variable_id) return &v;
  return nullptr;
}

const Sentence* Passage::find(std::string_view sentence_id) const {
  for (const auto& s : sentences)
    if (s.id == sentence_id) return &s;
  return nullptr;
}

std::optional<std::size_t> Passage::index_of(std::string_view sentence_id) const {
  for (std::size_t i = 0; i < sentences.size(); ++i)
    if (sentences[i].id == sentence_id) return i;
  return std::nullopt;
}

const Formula* LogicMetagraph::formula_for(std::string_view sentence_id) const {
  for (const auto& f : formulae)
    if (f.sentence == sentence_id) return &f;
  return nullptr;
}

bool structurally_equal(const LogicMetagraph& a, const LogicMetagraph& b) {
  if (a.passage != b.passage || a.degrees != b.degrees) return false;
  auto edges_a = a.edges, edges_b = b.edges;
  std::sort(edges_a.begin(), edges_a.end());
  std::sort(edges_b.begin(), edges_b.end());
  if (edges_a != edges_b) return false;
  auto by_sentence = [](const Formula& x, const Formula& y) { return x.sentence < y.sentence; };
  auto formulae_a = a.formulae, formulae_b = b.formulae;
  std::stable_sort(formulae_a.begin(), formulae_a.end(), by_sentence);
  std::stable_sort(formulae_b.begin(), formulae_b.end(), by_sentence);
  return formulae_a == formulae_b;
}

std::string_view violation_name(ViolationCode code) {
  switch (code) {
    case ViolationCode::Cycle: return "CYCLE";
    case ViolationCode::DanglingEdge: return "DANGLING_EDGE";
    case ViolationCode::DupFormula: return "DUP_FORMULA";
    case ViolationCode::BadSpan: return "BAD_SPAN";
    case ViolationCode::SelfLoop: return "SELF_LOOP";
    case ViolationCode::MissingDegree: return "MISSING_DEGREE";
    case ViolationCode::DupEdge: return "DUP_EDGE";
    case ViolationCode::DupSentence: return "DUP_SENTENCE";
    case ViolationCode::DupVariable: return "DUP_VARIABLE";
    case ViolationCode::EmptyPassage: return "EMPTY_PASSAGE";
    case ViolationCode::UnknownSentence: return "UNKNOWN_SENTENCE";
    case ViolationCode::UnknownVariable: return "UNKNOWN_VARIABLE";
    case ViolationCode::SameVariable: return "SAME_VARIABLE";
  }
  return "UNKNOWN";
}

std::string_view role_name(Role role) {
  switch (role) {
    case Role::Conclusion: return "conclusion";
    case Role::Rebuttal: return "rebuttal";
    case Role::ChainBeginning: return "chain_beginning";
    case Role::Intermediate: return "intermediate";
    case Role::Irrelevant: return "irrelevant";
  }
  return "unknown";
}

namespace {

std::string edge_subject(const MetaEdge& e) {
  return e.premise + (e.kind == EdgeType::Support ? "->" : "=>") + e.conclusion;
}

void check_passage(const Passage& passage, ValidationReport& out) {
  if (passage.sentences.empty())
    out.push_back({ViolationCode::EmptyPassage, passage.id, "passage has no sentences"});

  std::set<std::string> seen;
  for (const auto& s : passage.sentences) {
    if (!seen.insert(s.id).second)
      out.push_back({ViolationCode::DupSentence, s.id, "sentence id repeated"});

    std::set<std::string> vars;
    const CharSpan* previous = nullptr;
    for (const auto& v : s.variables) {
      if (!vars.insert(v.id).second)
        out.push_back({ViolationCode::DupVariable, s.id + "/" + v.id, "variable id repeated"});
      if (!v.span) continue;
      const auto& span = *v.span;
      const std::string subject = s.id + "/" + v.id;
      if (span.begin >= span.end) {
        out.push_back({ViolationCode::BadSpan, subject, "span start must precede end"});
      } else if (!s.text.empty() && span.end > s.text.size()) {
        out.push_back({ViolationCode::BadSpan, subject, "span exceeds sentence text"});
      } else if (previous && previous->end > span.begin) {
        out.push_back({ViolationCode::BadSpan, subject, "span overlaps or precedes the previous one"});
      }
      previous = &span;
    }
  }
}

// Strongly connected components with more than one member (Tarjan).
std::vector<std::vector<std::string>> cyclic_components(
    const std::vector<std::string>& nodes,
    const std::unordered_map<std::string, std::vector<std::string>>& succ) {
  std::unordered_map<std::string, int> index, low;
  std::unordered_map<std::string, bool> on_stack;
  std::vector<std::string> stack;
  std::vector<std::vector<std::string>> result;
  int counter = 0;

  std::function<void(const std::string&)> visit = [&](const std::string& v) {
    index[v] = low[v] = counter++;
    stack.push_back(v);
    on_stack[v] = true;
    if (auto it = succ.find(v); it != succ.end()) {
      for (const auto& w : it->second) {
        if (!index.contains(w)) {
          visit(w);
          low[v] = std::min(low[v], low[w]);
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
      }
    }
    if (low[v] == index[v]) {
      std::vector<std::string> component;
      std::string w;
      do {
        w = stack.back();
        stack.pop_back();
        on_stack[w] = false;
        component.push_back(w);
      } while (w != v);
      if (component.size() > 1) {
        std::sort(component.begin(), component.end());
        result.push_back(std::move(component));
      }
    }
  };

  for (const auto& n : nodes)
    if (!index.contains(n)) visit(n);
  return result;
}

void check_edges(const LogicMetagraph& graph, ValidationReport& out) {
  const auto& passage = graph.passage;
  std::set<std::pair<std::string, std::string>> pairs;
  std::unordered_map<std::string, std::vector<std::string>> succ;
  std::set<std::string> nodes;

  std::vector<MetaEdge> edges = graph.edges;
  std::sort(edges.begin(), edges.end());
  for (const auto& e : edges) {
    const std::string subject = edge_subject(e);
    bool usable = true;
    if (!passage.find(e.premise) || !passage.find(e.conclusion)) {
      out.push_back({ViolationCode::DanglingEdge, subject, "edge endpoint is not a passage sentence"});
      usable = false;
    }
    if (e.premise == e.conclusion) {
      out.push_back({ViolationCode::SelfLoop, subject, "edge joins a sentence to itself"});
      usable = false;
    }
    if (!pairs.emplace(e.premise, e.conclusion).second) {
      out.push_back({ViolationCode::DupEdge, subject, "sentence pair already has an edge"});
      usable = false;
    }
    if (usable) {
      succ[e.premise].push_back(e.conclusion);
      nodes.insert(e.premise);
      nodes.insert(e.conclusion);
    }
    if (passage.find(e.premise) && !graph.degrees.contains(e.premise))
      out.push_back({ViolationCode::MissingDegree, e.premise, "edge endpoint has no degree"});
    if (e.conclusion != e.premise && passage.find(e.conclusion) && !graph.degrees.contains(e.conclusion))
      out.push_back({ViolationCode::MissingDegree, e.conclusion, "edge endpoint has no degree"});
  }

  for (auto& [from, to] : succ) std::sort(to.begin(), to.end());
  const std::vector<std::string> ordered(nodes.begin(), nodes.end());
  for (const auto& component : cyclic_components(ordered, succ)) {
    std::string subject;
    for (const auto& id : component) subject += (subject.empty() ? "" : ",") + id;
    out.push_back({ViolationCode::Cycle, subject, "edges form a directed cycle"});
  }
}

void check_formulae(const LogicMetagraph& graph, ValidationReport& out) {
  std::set<std::string> seen;
  for (const auto& f : graph.formulae) {
    if (!seen.insert(f.sentence).second)
      out.push_back({ViolationCode::DupFormula, f.sentence, "sentence has more than one formula"});
    const Sentence* sentence = graph.passage.find(f.sentence);
    if (!sentence) {
      out.push_back({ViolationCode::UnknownSentence, f.sentence, "formula sentence not in passage"});
      continue;
    }
    for (const auto& t : f.triples) {
      for (const Operand* side : {&t.left, &t.right}) {
        if (!sentence->find_variable(side->variable))
          out.push_back({ViolationCode::UnknownVariable, f.sentence + "/" + side->variable,
                         "triple variable not declared in sentence"});
      }
      if (t.left.variable == t.right.variable)
        out.push_back({ViolationCode::SameVariable, f.sentence + "/" + t.left.variable,
                       "triple relates a variable to itself"});
    }
  }
  for (const auto& [id, degree] : graph.degrees) {
    if (!graph.passage.find(id))
      out.push_back({ViolationCode::UnknownSentence, id, "degree sentence not in passage"});
  }
}

}  // namespace

ValidationReport validate_graph(const LogicMetagraph& graph) {
  ValidationReport report;
  check_passage(graph.passage, report);
  check_edges(graph, report);
  check_formulae(graph, report);
  std::sort(report.begin(), report.end());
  report.erase(std::unique(report.begin(), report.end()), report.end());
  return report;
}

void require_valid(const LogicMetagraph& graph) {
  const auto report = validate_graph(graph);
  if (report.empty()) return;
  std::ostringstream msg;
  msg << "graph '" << graph.passage.id << "' has " << report.size() << " violation(s):";
  for (const auto& v : report) msg << ' ' << violation_name(v.code) << '(' << v.subject << ')';
  throw Error(Errc::InvalidGraph, msg.str());
}

std::map<std::string, Role> derive_roles(const LogicMetagraph& graph) {
  require_valid(graph);

  struct Degrees {
    int in_support = 0, out_support = 0, in_rebut = 0, out_rebut = 0;
  };
  std::map<std::string, Degrees> degrees;
  for (const auto& e : graph.edges) {
    if (e.kind == EdgeType::Support) {
      ++degrees[e.premise].out_support;
      ++degrees[e.conclusion].in_support;
    } else {
      ++degrees[e.premise].out_rebut;
      ++degrees[e.conclusion].in_rebut;
    }
  }

  std::map<std::string, Role> roles;
  for (const auto& s : graph.passage.sentences) {
    const Degrees d = degrees[s.id];
    const int incoming = d.in_support + d.in_rebut;
    Role role = Role::Irrelevant;
    if (d.out_rebut > 0) {
      role = Role::Rebuttal;
    } else if (d.out_support == 0 && incoming > 0) {
      // A node that is only ever rebutted is still the terminal claim.
      role = Role::Conclusion;
    } else if (d.out_support > 0 && incoming > 0) {
      role = Role::Intermediate;
    } else if (d.out_support > 0) {
      role = Role::ChainBeginning;
    }
    roles.emplace(s.id, role);
  }
  return roles;
}

std::set<Step> decompose_steps(const LogicMetagraph& graph) {
  require_valid(graph);
  std::set<Step> steps;
  for (const auto& e : graph.edges) steps.insert({e.premise, e.conclusion, e.kind});
  return steps;
}

std::set<std::string> participating_sentences(const LogicMetagraph& graph) {
  std::set<std::string> ids;
  for (const auto& e : graph.edges) {
    ids.insert(e.premise);
    ids.insert(e.conclusion);
  }
  return ids;
}

}  // namespace metalogic
