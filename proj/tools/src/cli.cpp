#include "metalogic/cli.hpp"

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "metalogic/agreement.hpp"
#include "metalogic/conllu.hpp"
#include "metalogic/corpus.hpp"
#include "metalogic/error.hpp"
#include "metalogic/extractor.hpp"
#include "metalogic/formula.hpp"
#include "metalogic/import.hpp"
#include "metalogic/json_codec.hpp"
#include "metalogic/lexicon.hpp"
#include "metalogic/linearized.hpp"
#include "metalogic/modal.hpp"
#include "metalogic/operator_words.hpp"
#include "metalogic/report.hpp"
#include "metalogic/scorer.hpp"
#include "metalogic/split.hpp"
#include "metalogic/stats.hpp"

namespace metalogic::cli {

namespace fs = std::filesystem;
using nlohmann::json;

std::optional<std::string> process_env(const std::string& name) {
  if (const char* v = std::getenv(name.c_str())) return std::string(v);
  return std::nullopt;
}

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::vector<std::string> paths;
  std::string gold, pred, dir, formula, conllu, graph;
  std::string format, out, lexicon, passages, emit_dir;
  std::string to = "json";
  bool strict = false, lenient = false;
  std::uint64_t seed = 0;
};

class Runner {
 public:
  Runner(const Options& o, std::ostream& out, std::ostream& err, const EnvLookup& env)
      : o_(o), out_(out), err_(err), env_(env) {}

  int validate();
  int score();
  int kappa();
  int canonicalize();
  int stats();
  int split();
  int extract_ops();
  int convert();

 private:
  bool as_json(const char* fallback = "table") const {
    return (o_.format.empty() ? std::string(fallback) : o_.format) == "json";
  }

  void emit(const std::string& payload) const {
    if (o_.out.empty()) {
      out_ << payload;
      return;
    }
    std::ofstream f(o_.out);
    if (!f) throw Error(Errc::Io, "cannot write '" + o_.out + "'");
    f << payload;
  }

  void emit(const json& doc) const { emit(doc.dump(2) + "\n"); }

  ParseMode parse_mode(ParseMode fallback) const {
    if (o_.strict) return ParseMode::Strict;
    if (o_.lenient) return ParseMode::Lenient;
    if (auto v = env_("METALOGIC_PARSE_MODE"); v && !v->empty()) {
      if (*v == "strict") return ParseMode::Strict;
      if (*v == "lenient") return ParseMode::Lenient;
      throw UsageError("METALOGIC_PARSE_MODE must be 'strict' or 'lenient', got '" + *v + "'");
    }
    return fallback;
  }

  IndicatorLexicon lexicon() const {
    std::string path = o_.lexicon;
    if (path.empty())
      if (auto v = env_("METALOGIC_LEXICON")) path = *v;
    IndicatorLexicon lex = path.empty() ? IndicatorLexicon::defaults() : load_lexicon(path);
    lex.validate();
    return lex;
  }

  std::vector<LogicMetagraph> load(const std::vector<std::string>& paths) const {
    std::vector<fs::path> in(paths.begin(), paths.end());
    std::vector<LogicMetagraph> graphs;
    for (const auto& p : expand_paths(in, registry_)) {
      auto part = registry_.load(p);
      graphs.insert(graphs.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
    }
    return graphs;
  }

  static std::string read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw Error(Errc::Io, "cannot open '" + path + "'");
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
  }

  void report_diagnostics(const std::string& id, const std::vector<Diagnostic>& diagnostics) const {
    for (const auto& d : diagnostics)
      err_ << id << ": " << diag_name(d.code) << " at " << d.position << ": " << d.message << '\n';
  }

  const Options& o_;
  std::ostream& out_;
  std::ostream& err_;
  const EnvLookup& env_;
  AdapterRegistry registry_ = AdapterRegistry::with_builtins();
};

int Runner::validate() {
  std::vector<fs::path> in(o_.paths.begin(), o_.paths.end());
  const auto report = validate_corpus(in, registry_);
  for (const auto& f : report.files)
    if (!f.error.empty()) err_ << f.path.generic_string() << ": " << f.error << '\n';
  if (report.files.empty()) err_ << "no readable input files found\n";
  emit(as_json() ? to_json(report).dump(2) + "\n" : render_table(report));
  if (report.has_io_errors()) return kExitUsage;
  return report.ok() ? kExitOk : kExitViolation;
}

int Runner::score() {
  const ParseMode mode = parse_mode(ParseMode::Lenient);
  const auto gold = load({o_.gold});

  bool bad = false;
  std::set<std::string> gold_ids;
  for (const auto& g : gold) {
    if (!gold_ids.insert(g.passage.id).second) {
      err_ << "gold " << g.passage.id << ": duplicate passage id\n";
      bad = true;
    }
    for (const auto& v : validate_graph(g)) {
      err_ << "gold " << g.passage.id << ": " << violation_name(v.code) << " " << v.subject << '\n';
      bad = true;
    }
  }
  if (bad) return kExitViolation;

  const auto ext = fs::path(o_.pred).extension();
  std::map<std::string, LogicMetagraph> pred_graphs;
  std::map<std::string, std::string> pred_lines;
  if (ext == ".json" || ext == ".jsonl") {
    for (auto& g : registry_.load(o_.pred)) {
      const std::string id = g.passage.id;
      if (!pred_graphs.insert_or_assign(id, std::move(g)).second) err_ << id << ": repeated prediction, last one kept\n";
    }
  } else {
    std::ifstream f(o_.pred);
    if (!f) throw Error(Errc::Io, "cannot open '" + o_.pred + "'");
    for (auto& [id, text] : read_keyed_lines(f))
      if (!pred_lines.insert_or_assign(id, std::move(text)).second) err_ << id << ": repeated prediction, last one kept\n";
  }

  std::vector<SamplePrediction> samples;
  for (const auto& g : gold) {
    const std::string& id = g.passage.id;
    if (auto it = pred_graphs.find(id); it != pred_graphs.end()) {
      samples.push_back({g, it->second, {}});
    } else if (auto lt = pred_lines.find(id); lt != pred_lines.end()) {
      const auto outcome = parse_linearized(lt->second, g.passage, mode);
      report_diagnostics(id, outcome.diagnostics);
      samples.push_back(SamplePrediction::from_outcome(g, outcome));
    } else {
      err_ << id << ": no prediction, scored as empty\n";
      LogicMetagraph empty;
      empty.passage = g.passage;
      samples.push_back({g, std::move(empty), {}});
    }
  }
  for (const auto& [id, _] : pred_graphs)
    if (!gold_ids.contains(id)) err_ << id << ": prediction has no gold passage, ignored\n";
  for (const auto& [id, _] : pred_lines)
    if (!gold_ids.contains(id)) err_ << id << ": prediction has no gold passage, ignored\n";

  const auto report = score_dataset(samples);
  for (const auto& e : report.errors) err_ << e.passage_id << ": " << e.message << '\n';
  emit(as_json() ? to_json(report).dump(2) + "\n" : render_table(report));
  return kExitOk;
}

int Runner::kappa() {
  const fs::path root(o_.dir);
  const fs::path dir_a = root / "a", dir_b = root / "b";
  for (const auto& d : {dir_a, dir_b})
    if (!fs::is_directory(d)) throw Error(Errc::Io, "missing annotator directory '" + d.generic_string() + "'");

  auto side = [&](const fs::path& dir) {
    std::map<std::string, LogicMetagraph> by_id;
    for (auto& g : load({dir.string()})) {
      const std::string id = g.passage.id;
      if (!by_id.emplace(id, std::move(g)).second)
        throw Error(Errc::PairingError, "passage '" + id + "' annotated twice under " + dir.generic_string());
    }
    return by_id;
  };
  auto a = side(dir_a);
  auto b = side(dir_b);

  json errors = json::array();
  auto fail = [&](const std::string& passage, std::string_view dimension, const std::string& message) {
    err_ << passage << ": " << dimension << ": " << message << '\n';
    errors.push_back({{"passage", passage}, {"dimension", dimension}, {"message", message}});
  };

  std::vector<AnnotationPair> pairs;
  for (const auto& [id, ga] : a) {
    auto it = b.find(id);
    if (it == b.end()) {
      fail(id, "pairing", "PAIRING_ERROR: no partner annotation in b/");
      continue;
    }
    AnnotationPair pair{ga.passage, ga, it->second};
    try {
      check_pair(pair);
      pairs.push_back(std::move(pair));
    } catch (const Error& e) {
      fail(id, "pairing", e.what());
    }
  }
  for (const auto& [id, _] : b)
    if (!a.contains(id)) fail(id, "pairing", "PAIRING_ERROR: no partner annotation in a/");
  if (pairs.empty() && errors.empty()) throw Error(Errc::EmptyInput, "no annotation pairs found");

  // Passages that break one dimension are left out of that dimension only.
  auto usable = [&](std::string_view dimension, auto&& compute) {
    std::vector<AnnotationPair> kept;
    for (const auto& p : pairs) {
      try {
        compute(std::span<const AnnotationPair>(&p, 1));
        kept.push_back(p);
      } catch (const Error& e) {
        fail(p.passage.id, dimension, e.what());
      }
    }
    return kept;
  };

  std::optional<KappaResult> node, edge, relation;
  std::optional<VariableAgreement> variable;
  if (!pairs.empty()) {
    node = kappa_meta_node(pairs);
    edge = kappa_meta_edge(pairs);
  }
  auto var_pairs = usable("logical_variable", [](auto s) { return kappa_logical_variable(s); });
  if (!var_pairs.empty()) variable = kappa_logical_variable(var_pairs);
  auto rel_pairs = usable("logical_relation", [](auto s) { return kappa_logical_relation(s); });
  if (!rel_pairs.empty()) relation = kappa_logical_relation(rel_pairs);

  if (as_json()) {
    auto opt = [](const std::optional<KappaResult>& r) { return r ? to_json(*r) : json(nullptr); };
    json doc = {{"passages", pairs.size()},
                {"meta_node", opt(node)},
                {"meta_edge", opt(edge)},
                {"logical_variable", nullptr},
                {"logical_relation", opt(relation)},
                {"errors", errors}};
    if (variable)
      doc["logical_variable"] = {{"kappa", variable->kappa},
                                 {"per_passage", variable->per_passage},
                                 {"tokens", variable->tokens},
                                 {"passages", var_pairs.size()}};
    emit(doc);
  } else {
    std::ostringstream os;
    os << std::left << std::setw(18) << "Dimension" << std::right << std::setw(9) << "Kappa" << std::setw(9)
       << "Items" << '\n';
    auto row = [&](const char* name, std::optional<double> k, std::size_t items) {
      os << std::left << std::setw(18) << name << std::right << std::setw(9);
      if (k) {
        os << std::fixed << std::setprecision(4) << *k;
      } else {
        os << "-";
      }
      os << std::setw(9) << items << '\n';
    };
    row("meta-node", node ? std::optional(node->kappa) : std::nullopt, node ? node->items : 0);
    row("meta-edge", edge ? std::optional(edge->kappa) : std::nullopt, edge ? edge->items : 0);
    row("logical-variable", variable ? std::optional(variable->kappa) : std::nullopt, variable ? variable->tokens : 0);
    row("logical-relation", relation ? std::optional(relation->kappa) : std::nullopt, relation ? relation->items : 0);
    os << "passages: " << pairs.size() << ", errors: " << errors.size() << '\n';
    emit(os.str());
  }
  return errors.empty() ? kExitOk : kExitViolation;
}

int Runner::canonicalize() {
  const Formula input = parse_formula_text(o_.formula);
  const CanonicalPrefix global = normalize(input.global);

  std::vector<LogicalTriple> triples;
  for (const auto& t : input.triples) triples.push_back(to_triple(canonicalize_triple(t)));

  std::string text = prefix_words(to_prefix(global));
  auto append = [&text](const std::string& piece) {
    if (!text.empty()) text += ' ';
    text += piece;
  };
  if (!input.sentence.empty()) append(input.sentence + ":");
  for (std::size_t i = 0; i < triples.size(); ++i)
    append(serialize_triple(triples[i]) + (i + 1 < triples.size() ? ";" : ""));

  auto words = [](const ModalPrefix& p) {
    auto arr = json::array();
    for (auto op : p.ops) arr.push_back(word_of(op));
    return arr;
  };
  if (as_json()) {
    json jt = json::array();
    for (const auto& t : triples) {
      auto side = [&](const Operand& o) {
        return json{{"var", o.variable}, {"prefix", words(o.prefix)}, {"degree", degree_word(reduce_to_degree(o.prefix))}};
      };
      jt.push_back({{"left", side(t.left)}, {"op", word_of(t.op)}, {"right", side(t.right)}, {"text", serialize_triple(t)}});
    }
    json doc = {{"input", o_.formula},
                {"canonical", text},
                {"global", {{"prefix", words(to_prefix(global))}, {"degree", degree_word(degree_of(global))}}},
                {"triples", jt}};
    if (!input.sentence.empty()) doc["sentence"] = input.sentence;
    emit(doc);
    return kExitOk;
  }
  std::ostringstream os;
  os << text << '\n';
  os << "degree: " << degree_word(degree_of(global)) << '\n';
  std::set<std::string> seen;
  for (const auto& t : triples)
    for (const Operand* o : {&t.left, &t.right})
      if (seen.insert(o->variable + "|" + prefix_words(o->prefix)).second) {
        const std::string w = prefix_words(o->prefix);
        os << "  " << (w.empty() ? "" : w + " ") << o->variable << ": " << degree_word(reduce_to_degree(o->prefix))
           << '\n';
      }
  emit(os.str());
  return kExitOk;
}

int Runner::stats() {
  const auto graphs = load(o_.paths);
  const auto s = compute_stats(graphs);
  emit(as_json() ? to_json(s).dump(2) + "\n" : render_table(s));
  return kExitOk;
}

int Runner::split() {
  const auto graphs = load(o_.paths);
  const auto parts = metalogic::split(graphs, o_.seed);
  if (!o_.emit_dir.empty()) {
    std::error_code ec;
    fs::create_directories(o_.emit_dir, ec);
    for (const auto& [name, part] : {std::pair{"train", &parts.train}, {"dev", &parts.dev}, {"test", &parts.test}}) {
      const fs::path p = fs::path(o_.emit_dir) / (std::string(name) + ".json");
      std::ofstream f(p);
      if (!f) throw Error(Errc::Io, "cannot write '" + p.generic_string() + "'");
      f << write_json_corpus(*part).dump(2) << '\n';
    }
  }
  emit(split_manifest(parts, o_.seed));
  return kExitOk;
}

int Runner::extract_ops() {
  const auto lex = lexicon();
  const auto parses = ingest_conllu(read_file(o_.conllu));

  struct Target {
    std::string passage;
    Sentence sentence;
  };
  std::vector<Target> targets;
  if (!o_.graph.empty()) {
    for (const auto& g : load({o_.graph}))
      for (const auto& s : g.passage.sentences) targets.push_back({g.passage.id, s});
    if (targets.size() != parses.size())
      throw Error(Errc::ParseMismatch, std::to_string(parses.size()) + " parses for " +
                                           std::to_string(targets.size()) + " sentences");
    for (std::size_t i = 0; i < parses.size(); ++i) {
      const auto& sid = parses[i].sent_id;
      const auto& t = targets[i];
      if (!sid.empty() && sid != t.sentence.id && sid != t.passage + "/" + t.sentence.id)
        throw Error(Errc::ParseMismatch, "parse '" + sid + "' does not belong to " + t.passage + "/" + t.sentence.id);
    }
  } else {
    for (std::size_t i = 0; i < parses.size(); ++i) {
      Sentence s;
      s.id = parses[i].sent_id.empty() ? "s" + std::to_string(i + 1) : parses[i].sent_id;
      s.text = parses[i].text;
      targets.push_back({"", std::move(s)});
    }
  }

  auto words = [](const ModalPrefix& p) {
    auto arr = json::array();
    for (auto op : p.ops) arr.push_back(word_of(op));
    return arr;
  };
  json rows = json::array();
  for (std::size_t i = 0; i < parses.size(); ++i) {
    const auto& t = targets[i];
    const auto r = extract_operators(t.sentence, parses[i], lex);
    json local = json::object();
    for (const auto& [var, prefix] : r.local) local[var] = words(prefix);
    json matches = json::array();
    for (const auto& m : r.matched) {
      json jm = {{"token", m.token}, {"form", parses[i].tokens[m.token].form}, {"op", word_of(m.op)}, {"hops", m.hops}};
      if (!m.variable.empty()) jm["variable"] = m.variable;
      matches.push_back(jm);
    }
    json row = {{"sentence", t.sentence.id}, {"global", words(r.global)}, {"local", local}, {"matches", matches}};
    if (!t.passage.empty()) row["passage"] = t.passage;
    rows.push_back(row);
  }
  emit(json{{"sentences", rows}});
  return kExitOk;
}

int Runner::convert() {
  std::vector<LogicMetagraph> graphs;
  if (!o_.passages.empty()) {
    std::map<std::string, Passage> known;
    for (const auto& g : load({o_.passages})) known.emplace(g.passage.id, g.passage);
    const ParseMode mode = parse_mode(ParseMode::Strict);
    for (const auto& path : o_.paths) {
      std::ifstream f(path);
      if (!f) throw Error(Errc::Io, "cannot open '" + path + "'");
      for (const auto& [id, text] : read_keyed_lines(f)) {
        auto it = known.find(id);
        if (it == known.end()) throw Error(Errc::PassageMismatch, "no passage '" + id + "' in " + o_.passages);
        auto outcome = parse_linearized(text, it->second, mode);
        report_diagnostics(id, outcome.diagnostics);
        if (!outcome.graph) throw Error(Errc::Syntax, "passage '" + id + "' does not parse");
        graphs.push_back(std::move(*outcome.graph));
      }
    }
  } else {
    graphs = load(o_.paths);
  }

  if (o_.to == "json") {
    emit(write_json_corpus(graphs));
  } else {
    std::string payload;
    for (const auto& g : graphs) payload += g.passage.id + " " + serialize_linearized(g) + "\n";
    emit(payload);
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const EnvLookup& env) {
  Options o;
  CLI::App app{"Logic metagraph toolkit", "metalogic"};
  app.require_subcommand(1);

  auto common = [&](CLI::App* sub, bool format) {
    if (format) sub->add_option("--format", o.format, "json or table")->check(CLI::IsMember({"json", "table"}));
    sub->add_option("--out", o.out, "write the report to this file instead of stdout");
  };
  auto parse_flags = [&](CLI::App* sub) {
    auto* s = sub->add_flag("--strict", o.strict, "abort a prediction at its first diagnostic");
    auto* l = sub->add_flag("--lenient", o.lenient, "recover from malformed predictions");
    s->excludes(l);
  };

  auto* validate = app.add_subcommand("validate", "check files or directories of metagraphs");
  validate->add_option("paths", o.paths, "files or directories")->required();
  common(validate, true);

  auto* score = app.add_subcommand("score", "score predictions against gold metagraphs");
  score->add_option("gold", o.gold, "gold metagraphs (JSON)")->required();
  score->add_option("pred", o.pred, "predictions: '<id> <linearized>' lines, or JSON")->required();
  parse_flags(score);
  common(score, true);

  auto* kappa = app.add_subcommand("kappa", "inter-annotator agreement over a/ and b/ subdirectories");
  kappa->add_option("dir", o.dir, "directory holding a/ and b/")->required();
  common(kappa, true);

  auto* canon = app.add_subcommand("canonicalize", "reduce a formula to canonical form");
  canon->add_option("formula", o.formula, "formula in bracket-word syntax")->required();
  common(canon, true);

  auto* stats = app.add_subcommand("stats", "label statistics of a corpus");
  stats->add_option("paths", o.paths, "files or directories")->required();
  common(stats, true);

  auto* split = app.add_subcommand("split", "seeded 60/20/20 train/dev/test split");
  split->add_option("paths", o.paths, "files or directories")->required();
  split->add_option("--seed", o.seed, "shuffle seed")->capture_default_str();
  split->add_option("--emit-dir", o.emit_dir, "also write train.json, dev.json and test.json here");
  common(split, false);

  auto* extract = app.add_subcommand("extract-ops", "rule-based unary operator extraction");
  extract->add_option("conllu", o.conllu, "CoNLL-U parses, one per sentence")->required();
  extract->add_option("--graph", o.graph, "metagraph supplying sentence texts and variable spans");
  extract->add_option("--lexicon", o.lexicon, "indicator lexicon (.txt sections or .json)");
  common(extract, false);

  auto* convert = app.add_subcommand("convert", "convert between canonical JSON and linearized lines");
  convert->add_option("paths", o.paths, "input files or directories")->required();
  convert->add_option("--to", o.to, "json or linearized")
      ->check(CLI::IsMember({"json", "linearized"}))
      ->capture_default_str();
  convert->add_option("--passages", o.passages, "resolve linearized ids against these passages");
  parse_flags(convert);
  common(convert, false);

  std::vector<const char*> argv{"metalogic"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  Runner r(o, out, err, env);
  try {
    if (*validate) return r.validate();
    if (*score) return r.score();
    if (*kappa) return r.kappa();
    if (*canon) return r.canonicalize();
    if (*stats) return r.stats();
    if (*split) return r.split();
    if (*extract) return r.extract_ops();
    if (*convert) return r.convert();
  } catch (const UsageError& e) {
    err << "usage: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << e.what() << '\n';
    return e.code() == Errc::Io ? kExitUsage : kExitViolation;
  } catch (const std::exception& e) {
    err << e.what() << '\n';
    return kExitViolation;
  }
  return kExitUsage;
}

}  // namespace metalogic::cli
