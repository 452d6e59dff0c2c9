#include "oracles.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace oracle {

using namespace metalogic;

namespace {

using Memo = std::vector<std::vector<signed char>>;

bool holds_memo(const ModalPrefix& prefix, const std::vector<bool>& valuation, std::size_t world, std::size_t from,
                Memo& memo) {
  if (from == prefix.ops.size()) return valuation[world];
  auto& slot = memo[from][world];
  if (slot >= 0) return slot == 1;
  bool v = false;
  switch (prefix.ops[from]) {
    case UnaryOp::Negation:
      v = !holds_memo(prefix, valuation, world, from + 1, memo);
      break;
    case UnaryOp::Box:
      v = true;
      for (std::size_t w = 0; w < valuation.size() && v; ++w) v = holds_memo(prefix, valuation, w, from + 1, memo);
      break;
    case UnaryOp::Diamond:
      for (std::size_t w = 0; w < valuation.size() && !v; ++w) v = holds_memo(prefix, valuation, w, from + 1, memo);
      break;
  }
  slot = v ? 1 : 0;
  return v;
}

}  // namespace

bool holds(const ModalPrefix& prefix, const std::vector<bool>& valuation, std::size_t world, std::size_t from) {
  Memo memo(prefix.ops.size(), std::vector<signed char>(valuation.size(), -1));
  return holds_memo(prefix, valuation, world, from, memo);
}

bool equivalent(const ModalPrefix& a, const ModalPrefix& b) {
  for (std::size_t n = 1; n <= 3; ++n) {
    for (std::size_t bits = 0; bits < (std::size_t{1} << n); ++bits) {
      std::vector<bool> val(n);
      for (std::size_t w = 0; w < n; ++w) val[w] = (bits >> w) & 1U;
      for (std::size_t w = 0; w < n; ++w)
        if (holds(a, val, w) != holds(b, val, w)) return false;
    }
  }
  return true;
}

std::vector<ModalPrefix> all_prefixes(std::size_t length) {
  std::vector<ModalPrefix> out{ModalPrefix{}};
  for (std::size_t i = 0; i < length; ++i) {
    std::vector<ModalPrefix> next;
    for (const auto& p : out)
      for (auto op : {UnaryOp::Negation, UnaryOp::Box, UnaryOp::Diamond}) {
        auto q = p;
        q.ops.push_back(op);
        next.push_back(q);
      }
    out = std::move(next);
  }
  return out;
}

bool has_cycle(const LogicMetagraph& graph) {
  std::map<std::string, std::vector<std::string>> succ;
  for (const auto& e : graph.edges)
    if (graph.passage.find(e.premise) && graph.passage.find(e.conclusion) && e.premise != e.conclusion)
      succ[e.premise].push_back(e.conclusion);
  std::map<std::string, int> colour;  // 0 white, 1 grey, 2 black
  auto dfs = [&](auto&& self, const std::string& v) -> bool {
    colour[v] = 1;
    for (const auto& w : succ[v]) {
      if (colour[w] == 1) return true;
      if (colour[w] == 0 && self(self, w)) return true;
    }
    colour[v] = 2;
    return false;
  };
  for (const auto& s : graph.passage.sentences)
    if (colour[s.id] == 0 && dfs(dfs, s.id)) return true;
  return false;
}

double f1(std::size_t matched, std::size_t predicted, std::size_t gold) {
  if (predicted + gold == 0) return 1.0;
  return 2.0 * static_cast<double>(matched) / static_cast<double>(predicted + gold);
}

namespace {

template <typename T>
std::vector<T> unique_items(std::vector<T> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

std::vector<std::string> nodes(const LogicMetagraph& g) {
  std::vector<std::string> out;
  for (const auto& e : g.edges) {
    out.push_back(e.premise);
    out.push_back(e.conclusion);
  }
  return unique_items(out);
}

std::vector<MetaEdge> steps(const LogicMetagraph& g) { return unique_items(g.edges); }

struct Item {
  bool global = false;
  ModalPrefix prefix;
  LogicalTriple triple;
};

std::vector<Item> items(const LogicMetagraph& g, const std::string& sentence, bool& present) {
  std::vector<Item> out;
  present = false;
  for (const auto& f : g.formulae) {
    if (f.sentence != sentence) continue;
    if (!present && !equivalent(f.global, {})) out.push_back({true, f.global, {}});
    present = true;
    for (const auto& t : f.triples) out.push_back({false, {}, t});
  }
  return out;
}

}  // namespace

double node_f1(const LogicMetagraph& gold, const LogicMetagraph& pred) {
  const auto g = nodes(gold), p = nodes(pred);
  return f1(max_matching(g, p, std::equal_to<>{}), p.size(), g.size());
}

double step_f1(const LogicMetagraph& gold, const LogicMetagraph& pred) {
  const auto g = steps(gold), p = steps(pred);
  return f1(max_matching(g, p, std::equal_to<>{}), p.size(), g.size());
}

bool triples_match(const LogicalTriple& a, const LogicalTriple& b) {
  if (a.op != b.op) return false;
  auto same = [](const Operand& x, const Operand& y) {
    return x.variable == y.variable && equivalent(x.prefix, y.prefix);
  };
  if (same(a.left, b.left) && same(a.right, b.right)) return true;
  return a.op != BinaryOp::Implication && same(a.left, b.right) && same(a.right, b.left);
}

double formula_f1(const LogicMetagraph& gold, const LogicMetagraph& pred) {
  std::set<std::string> sentences;
  for (const auto& f : gold.formulae) sentences.insert(f.sentence);
  for (const auto& f : pred.formulae) sentences.insert(f.sentence);
  if (sentences.empty()) return 1.0;
  double total = 0.0;
  for (const auto& id : sentences) {
    bool in_gold = false, in_pred = false;
    const auto g = items(gold, id, in_gold);
    const auto p = items(pred, id, in_pred);
    const auto m = max_matching(g, p, [](const Item& x, const Item& y) {
      if (x.global != y.global) return false;
      return x.global ? equivalent(x.prefix, y.prefix) : triples_match(x.triple, y.triple);
    });
    total += f1(m, p.size(), g.size());
  }
  return total / static_cast<double>(sentences.size());
}

// ---------------------------------------------------------------------------

namespace {

std::size_t pick(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

bool coin(std::mt19937_64& rng, double p) { return std::bernoulli_distribution(p)(rng); }

ModalPrefix random_prefix(std::mt19937_64& rng, std::size_t max_len) {
  ModalPrefix p;
  const std::size_t n = pick(rng, 0, max_len);
  for (std::size_t i = 0; i < n; ++i) p.ops.push_back(static_cast<UnaryOp>(pick(rng, 0, 2)));
  return p;
}

LogicalTriple random_triple(std::mt19937_64& rng, const Sentence& s, std::size_t max_prefix) {
  const std::size_t a = pick(rng, 0, s.variables.size() - 1);
  std::size_t b = pick(rng, 0, s.variables.size() - 2);
  if (b >= a) ++b;
  return {{s.variables[a].id, random_prefix(rng, max_prefix)},
          static_cast<BinaryOp>(pick(rng, 0, 2)),
          {s.variables[b].id, random_prefix(rng, max_prefix)}};
}

const char* const kWords[] = {"rain", "roads", "wet",  "cars",   "slow", "people", "late",
                              "work", "the",   "city", "before", "noon", "trains", "run"};

}  // namespace

LogicMetagraph random_graph(std::mt19937_64& rng, const GraphShape& shape, std::string id) {
  LogicMetagraph g;
  g.passage.id = std::move(id);
  const std::size_t n = pick(rng, 1, shape.max_sentences);
  for (std::size_t i = 0; i < n; ++i) {
    Sentence s;
    s.id = "sent" + std::to_string(i + 1);
    const std::size_t vars = pick(rng, 1, shape.max_variables);
    for (std::size_t v = 0; v < vars; ++v) {
      if (!s.text.empty()) s.text += ' ';
      const std::size_t begin = s.text.size();
      s.text += kWords[pick(rng, 0, std::size(kWords) - 1)];
      VariableSpan var{"v" + std::to_string(v + 1), std::nullopt};
      if (shape.spans) var.span = CharSpan{begin, s.text.size()};
      s.variables.push_back(var);
      s.text += ' ';
      s.text += kWords[pick(rng, 0, std::size(kWords) - 1)];
    }
    g.passage.sentences.push_back(std::move(s));
  }

  // Edges only run forward in a random ranking, so the graph is acyclic.
  std::vector<std::size_t> rank(n);
  for (std::size_t i = 0; i < n; ++i) rank[i] = i;
  std::shuffle(rank.begin(), rank.end(), rng);
  std::set<std::pair<std::size_t, std::size_t>> used;
  const std::size_t want = n < 2 ? 0 : pick(rng, 0, std::min(shape.max_edges, n * (n - 1) / 2));
  for (std::size_t tries = 0; used.size() < want && tries < 100; ++tries) {
    std::size_t a = pick(rng, 0, n - 1), b = pick(rng, 0, n - 1);
    if (a == b) continue;
    if (rank[a] > rank[b]) std::swap(a, b);
    if (!used.emplace(a, b).second) continue;
    g.edges.push_back({g.passage.sentences[a].id, g.passage.sentences[b].id,
                       coin(rng, 0.3) ? EdgeType::Rebut : EdgeType::Support});
  }

  for (const auto& s : g.passage.sentences) {
    if (coin(rng, 0.8)) g.degrees[s.id] = static_cast<CanonicalDegree>(pick(rng, 0, 4));
    if (!coin(rng, 0.6)) continue;
    Formula f{s.id, {}, random_prefix(rng, shape.max_prefix)};
    if (s.variables.size() >= 2) {
      const std::size_t k = pick(rng, 0, shape.max_triples);
      for (std::size_t t = 0; t < k; ++t) f.triples.push_back(random_triple(rng, s, shape.max_prefix));
    }
    g.formulae.push_back(std::move(f));
  }
  for (const auto& e : g.edges)
    for (const auto& id : {e.premise, e.conclusion})
      if (!g.degrees.contains(id)) g.degrees[id] = static_cast<CanonicalDegree>(pick(rng, 0, 4));
  return g;
}

LogicMetagraph perturb(std::mt19937_64& rng, const LogicMetagraph& graph) {
  LogicMetagraph p;
  p.passage = graph.passage;
  const auto& sentences = graph.passage.sentences;
  for (auto e : graph.edges) {
    if (coin(rng, 0.2)) continue;
    if (coin(rng, 0.15)) e.kind = e.kind == EdgeType::Support ? EdgeType::Rebut : EdgeType::Support;
    if (coin(rng, 0.1)) std::swap(e.premise, e.conclusion);
    p.edges.push_back(e);
  }
  if (sentences.size() >= 2 && coin(rng, 0.3)) {
    const auto a = pick(rng, 0, sentences.size() - 1), b = pick(rng, 0, sentences.size() - 1);
    p.edges.push_back({sentences[a].id, sentences[b].id, coin(rng, 0.5) ? EdgeType::Support : EdgeType::Rebut});
  }
  for (auto f : graph.formulae) {
    if (coin(rng, 0.1)) continue;
    if (coin(rng, 0.2)) f.global = random_prefix(rng, 3);
    std::vector<LogicalTriple> kept;
    for (auto t : f.triples) {
      if (coin(rng, 0.15)) continue;
      if (coin(rng, 0.25)) std::swap(t.left, t.right);
      if (coin(rng, 0.1)) t.op = static_cast<BinaryOp>(pick(rng, 0, 2));
      if (coin(rng, 0.2)) t.left.prefix = random_prefix(rng, 3);
      if (coin(rng, 0.1)) t.left.prefix.ops.insert(t.left.prefix.ops.begin(), 2, UnaryOp::Negation);
      kept.push_back(t);
    }
    const Sentence* s = graph.passage.find(f.sentence);
    if (s && s->variables.size() >= 2 && coin(rng, 0.2)) kept.push_back(random_triple(rng, *s, 3));
    f.triples = kept;
    p.formulae.push_back(f);
  }
  for (const auto& s : sentences) {
    if (coin(rng, 0.1) && s.variables.size() >= 2 && !p.formula_for(s.id))
      p.formulae.push_back({s.id, {random_triple(rng, s, 2)}, {}});
  }
  for (auto [id, d] : graph.degrees) {
    if (coin(rng, 0.1)) continue;
    if (coin(rng, 0.2)) d = static_cast<CanonicalDegree>(pick(rng, 0, 4));
    p.degrees[id] = d;
  }
  return p;
}

}  // namespace oracle
