#include "metalogic/agreement.hpp"

#include <algorithm>
#include <cctype>

#include "metalogic/error.hpp"
#include "metalogic/operator_words.hpp"

namespace metalogic {

namespace {

struct Pool {
  std::vector<std::string> a;
  std::vector<std::string> b;

  void add(std::string x, std::string y) {
    a.push_back(std::move(x));
    b.push_back(std::move(y));
  }
};

std::vector<std::string> sentence_ids(const Passage& p) {
  std::vector<std::string> ids;
  for (const auto& s : p.sentences) ids.push_back(s.id);
  return ids;
}

}  // namespace

KappaResult cohen_kappa(std::span<const std::string> labels_a, std::span<const std::string> labels_b,
                        const std::set<std::string>& label_space) {
  if (labels_a.size() != labels_b.size())
    throw Error(Errc::LengthMismatch, std::to_string(labels_a.size()) + " vs " + std::to_string(labels_b.size()));
  if (labels_a.empty()) throw Error(Errc::EmptyInput, "no labels to compare");

  KappaResult r;
  r.items = labels_a.size();
  r.label_space = label_space.size();
  std::map<std::string, std::size_t> marginal_a, marginal_b;
  std::size_t agree = 0;
  for (std::size_t i = 0; i < labels_a.size(); ++i) {
    for (const auto* label : {&labels_a[i], &labels_b[i]})
      if (!label_space.contains(*label)) throw Error(Errc::UnknownLabel, "'" + *label + "'");
    ++marginal_a[labels_a[i]];
    ++marginal_b[labels_b[i]];
    ++r.confusion[{labels_a[i], labels_b[i]}];
    if (labels_a[i] == labels_b[i]) ++agree;
  }

  const double n = static_cast<double>(r.items);
  r.observed = static_cast<double>(agree) / n;
  r.expected = 0.0;
  for (const auto& label : label_space) {
    const auto ia = marginal_a.find(label);
    const auto ib = marginal_b.find(label);
    if (ia == marginal_a.end() || ib == marginal_b.end()) continue;
    r.expected += (static_cast<double>(ia->second) / n) * (static_cast<double>(ib->second) / n);
  }
  if (r.expected >= 1.0) {
    r.kappa = r.observed >= 1.0 ? 1.0 : 0.0;
  } else {
    r.kappa = (r.observed - r.expected) / (1.0 - r.expected);
  }
  return r;
}

double kappa(std::span<const std::string> labels_a, std::span<const std::string> labels_b,
             const std::set<std::string>& label_space) {
  return cohen_kappa(labels_a, labels_b, label_space).kappa;
}

void check_pair(const AnnotationPair& pair) {
  require_valid(pair.a);
  require_valid(pair.b);
  const auto ids = sentence_ids(pair.passage);
  if (sentence_ids(pair.a.passage) != ids || sentence_ids(pair.b.passage) != ids)
    throw Error(Errc::PairingError, "annotations of '" + pair.passage.id + "' cover different sentences");
}

KappaResult kappa_meta_node(std::span<const AnnotationPair> pairs) {
  Pool pool;
  for (const auto& pair : pairs) {
    check_pair(pair);
    const auto ra = derive_roles(pair.a);
    const auto rb = derive_roles(pair.b);
    for (const auto& s : pair.passage.sentences)
      pool.add(std::string(role_name(ra.at(s.id))), std::string(role_name(rb.at(s.id))));
  }
  std::set<std::string> space;
  for (const Role r : {Role::Conclusion, Role::Rebuttal, Role::ChainBeginning, Role::Intermediate, Role::Irrelevant})
    space.emplace(role_name(r));
  return cohen_kappa(pool.a, pool.b, space);
}

KappaResult kappa_meta_edge(std::span<const AnnotationPair> pairs) {
  auto cells = [](const LogicMetagraph& g) {
    std::map<std::pair<std::string, std::string>, std::string> out;
    for (const auto& e : g.edges) out[{e.premise, e.conclusion}] = edge_kind_name(e.kind);
    return out;
  };
  Pool pool;
  for (const auto& pair : pairs) {
    check_pair(pair);
    const auto ca = cells(pair.a);
    const auto cb = cells(pair.b);
    auto label = [](const auto& m, const std::string& i, const std::string& j) {
      const auto it = m.find({i, j});
      return it == m.end() ? std::string("none") : it->second;
    };
    for (const auto& si : pair.passage.sentences)
      for (const auto& sj : pair.passage.sentences)
        if (si.id != sj.id) pool.add(label(ca, si.id, sj.id), label(cb, si.id, sj.id));
  }
  return cohen_kappa(pool.a, pool.b, {"support", "rebut", "none"});
}

VariableAgreement kappa_logical_variable(std::span<const AnnotationPair> pairs, const Tokenizer& tokenizer) {
  VariableAgreement out;
  for (const auto& pair : pairs) {
    check_pair(pair);
    Pool pool;
    for (std::size_t si = 0; si < pair.passage.sentences.size(); ++si) {
      const Sentence& sentence = pair.passage.sentences[si];
      auto membership = [&](const Sentence& annotated, CharSpan token) {
        for (const auto& v : annotated.variables) {
          if (!v.span)
            throw Error(Errc::MissingSpans, pair.passage.id + "/" + annotated.id + "/" + v.id + " has no span");
          if (v.span->begin < token.end && token.begin < v.span->end) return std::string("in");
        }
        return std::string("out");
      };
      for (const CharSpan token : tokenizer(sentence.text))
        pool.add(membership(pair.a.passage.sentences[si], token), membership(pair.b.passage.sentences[si], token));
    }
    if (pool.a.empty()) continue;
    out.tokens += pool.a.size();
    out.per_passage.push_back(cohen_kappa(pool.a, pool.b, {"in", "out"}).kappa);
  }
  if (out.per_passage.empty()) throw Error(Errc::EmptyInput, "no tokens to compare");
  double sum = 0.0;
  for (const double k : out.per_passage) sum += k;
  out.kappa = sum / static_cast<double>(out.per_passage.size());
  return out;
}

namespace {

// Alignment key per variable id of one annotator's sentence.
std::map<std::string, std::string> alignment_keys(const Sentence& s, bool by_span, const std::string& where) {
  std::map<std::string, std::string> keys;
  std::set<std::string> used;
  for (const auto& v : s.variables) {
    const std::string key =
        by_span ? "@" + std::to_string(v.span->begin) + ":" + std::to_string(v.span->end) : v.id;
    if (!used.insert(key).second)
      throw Error(Errc::VariableAlignmentFailure, where + ": two variables share alignment key " + key);
    keys[v.id] = key;
  }
  return keys;
}

bool all_spanned(const Sentence& s) {
  return std::all_of(s.variables.begin(), s.variables.end(), [](const auto& v) { return v.span.has_value(); });
}

std::map<std::pair<std::string, std::string>, std::string> relation_cells(
    const LogicMetagraph& graph, const std::string& sentence, const std::map<std::string, std::string>& keys) {
  std::map<std::pair<std::string, std::string>, std::string> cells;
  const Formula* f = graph.formula_for(sentence);
  if (!f) return cells;
  for (const auto& t : f->triples) {
    const std::string& x = keys.at(t.left.variable);
    const std::string& y = keys.at(t.right.variable);
    const std::string label(word_of(t.op));
    // First relation written for a cell wins.
    cells.emplace(std::pair{x, y}, label);
    if (t.op != BinaryOp::Implication) cells.emplace(std::pair{y, x}, label);
  }
  return cells;
}

}  // namespace

KappaResult kappa_logical_relation(std::span<const AnnotationPair> pairs) {
  Pool pool;
  for (const auto& pair : pairs) {
    check_pair(pair);
    for (std::size_t si = 0; si < pair.passage.sentences.size(); ++si) {
      const Sentence& sa = pair.a.passage.sentences[si];
      const Sentence& sb = pair.b.passage.sentences[si];
      const bool by_span = all_spanned(sa) && all_spanned(sb) && !sa.variables.empty() && !sb.variables.empty();
      const std::string where = pair.passage.id + "/" + sa.id;
      const auto ka = alignment_keys(sa, by_span, where);
      const auto kb = alignment_keys(sb, by_span, where);

      std::set<std::string> universe;
      for (const auto& [id, key] : ka) universe.insert(key);
      for (const auto& [id, key] : kb) universe.insert(key);

      const auto ca = relation_cells(pair.a, sa.id, ka);
      const auto cb = relation_cells(pair.b, sb.id, kb);
      auto label = [](const auto& cells, const std::string& x, const std::string& y) {
        const auto it = cells.find({x, y});
        return it == cells.end() ? std::string("none") : it->second;
      };
      for (const auto& x : universe)
        for (const auto& y : universe) pool.add(label(ca, x, y), label(cb, x, y));
    }
  }
  return cohen_kappa(pool.a, pool.b, {"entail", "and", "or", "none"});
}

nlohmann::json to_json(const KappaResult& r) {
  nlohmann::json confusion = nlohmann::json::array();
  for (const auto& [labels, count] : r.confusion)
    confusion.push_back({{"a", labels.first}, {"b", labels.second}, {"count", count}});
  return {{"kappa", r.kappa},   {"observed", r.observed},       {"expected", r.expected},
          {"items", r.items},   {"label_space", r.label_space}, {"confusion", std::move(confusion)}};
}

}  // namespace metalogic
