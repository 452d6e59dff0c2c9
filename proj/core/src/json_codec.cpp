#include "metalogic/json_codec.hpp"

#include "metalogic/error.hpp"
#include "metalogic/operator_words.hpp"

namespace metalogic {

using nlohmann::json;

namespace {

json prefix_json(const ModalPrefix& prefix) {
  json out = json::array();
  for (const UnaryOp op : prefix.ops) out.push_back(word_of(op));
  return out;
}

json operand_json(const Operand& operand) {
  return {{"var", operand.variable}, {"prefix", prefix_json(operand.prefix)}};
}

[[noreturn]] void violation(const std::string& pointer, const std::string& what) {
  throw Error(Errc::SchemaViolation, "at " + (pointer.empty() ? std::string("/") : pointer) + ": " + what);
}

const json& field(const json& object, const std::string& pointer, const char* key) {
  const auto it = object.find(key);
  if (it == object.end()) violation(pointer + "/" + key, "required field missing");
  return *it;
}

std::string string_at(const json& value, const std::string& pointer) {
  if (!value.is_string()) violation(pointer, "expected a string");
  return value.get<std::string>();
}

const json& array_at(const json& value, const std::string& pointer) {
  if (!value.is_array()) violation(pointer, "expected an array");
  return value;
}

const json& object_at(const json& value, const std::string& pointer) {
  if (!value.is_object()) violation(pointer, "expected an object");
  return value;
}

ModalPrefix read_prefix(const json& value, const std::string& pointer) {
  ModalPrefix prefix;
  std::size_t i = 0;
  for (const auto& item : array_at(value, pointer)) {
    const std::string at = pointer + "/" + std::to_string(i++);
    const auto op = operator_from_word(string_at(item, at));
    const auto* unary = op ? std::get_if<UnaryOp>(&*op) : nullptr;
    if (!unary) violation(at, "expected one of negative, necessary, possible");
    prefix.ops.push_back(*unary);
  }
  return prefix;
}

Operand read_operand(const json& value, const std::string& pointer) {
  object_at(value, pointer);
  Operand operand;
  operand.variable = string_at(field(value, pointer, "var"), pointer + "/var");
  if (value.contains("prefix")) operand.prefix = read_prefix(value["prefix"], pointer + "/prefix");
  return operand;
}

std::size_t offset_at(const json& value, const std::string& pointer) {
  if (!value.is_number_unsigned() && !(value.is_number_integer() && value.get<long long>() >= 0))
    violation(pointer, "expected a non-negative integer");
  return value.get<std::size_t>();
}

}  // namespace

json write_json(const LogicMetagraph& graph) {
  json sentences = json::array();
  for (const auto& s : graph.passage.sentences) {
    json vars = json::array();
    for (const auto& v : s.variables) {
      json var = {{"id", v.id}};
      if (v.span) var["span"] = {v.span->begin, v.span->end};
      vars.push_back(std::move(var));
    }
    sentences.push_back({{"id", s.id}, {"text", s.text}, {"variables", std::move(vars)}});
  }

  json edges = json::array();
  for (const auto& e : graph.edges)
    edges.push_back({{"premise", e.premise}, {"conclusion", e.conclusion}, {"kind", edge_kind_name(e.kind)}});

  json formulae = json::array();
  for (const auto& f : graph.formulae) {
    json triples = json::array();
    for (const auto& t : f.triples)
      triples.push_back({{"left", operand_json(t.left)}, {"op", word_of(t.op)}, {"right", operand_json(t.right)}});
    formulae.push_back({{"sentence", f.sentence}, {"global", prefix_json(f.global)}, {"triples", std::move(triples)}});
  }

  json degrees = json::object();
  for (const auto& [id, degree] : graph.degrees) degrees[id] = degree_word(degree);

  return {{"id", graph.passage.id},
          {"sentences", std::move(sentences)},
          {"edges", std::move(edges)},
          {"formulae", std::move(formulae)},
          {"degrees", std::move(degrees)}};
}

LogicMetagraph read_json(const json& doc) {
  object_at(doc, "");
  LogicMetagraph graph;
  graph.passage.id = string_at(field(doc, "", "id"), "/id");

  std::size_t i = 0;
  for (const auto& s : array_at(field(doc, "", "sentences"), "/sentences")) {
    const std::string at = "/sentences/" + std::to_string(i++);
    object_at(s, at);
    Sentence sentence;
    sentence.id = string_at(field(s, at, "id"), at + "/id");
    if (s.contains("text")) sentence.text = string_at(s["text"], at + "/text");
    if (s.contains("variables")) {
      std::size_t j = 0;
      for (const auto& v : array_at(s["variables"], at + "/variables")) {
        const std::string vat = at + "/variables/" + std::to_string(j++);
        object_at(v, vat);
        VariableSpan var{string_at(field(v, vat, "id"), vat + "/id"), std::nullopt};
        if (v.contains("span") && !v["span"].is_null()) {
          const auto& span = v["span"];
          if (!span.is_array() || span.size() != 2) violation(vat + "/span", "expected [start, end]");
          var.span = CharSpan{offset_at(span[0], vat + "/span/0"), offset_at(span[1], vat + "/span/1")};
        }
        sentence.variables.push_back(std::move(var));
      }
    }
    graph.passage.sentences.push_back(std::move(sentence));
  }

  i = 0;
  for (const auto& e : array_at(field(doc, "", "edges"), "/edges")) {
    const std::string at = "/edges/" + std::to_string(i++);
    object_at(e, at);
    MetaEdge edge;
    edge.premise = string_at(field(e, at, "premise"), at + "/premise");
    edge.conclusion = string_at(field(e, at, "conclusion"), at + "/conclusion");
    const auto kind = edge_kind_from_name(string_at(field(e, at, "kind"), at + "/kind"));
    if (!kind) violation(at + "/kind", "expected support or rebut");
    edge.kind = *kind;
    graph.edges.push_back(std::move(edge));
  }

  i = 0;
  for (const auto& f : array_at(field(doc, "", "formulae"), "/formulae")) {
    const std::string at = "/formulae/" + std::to_string(i++);
    object_at(f, at);
    Formula formula;
    formula.sentence = string_at(field(f, at, "sentence"), at + "/sentence");
    if (f.contains("global")) formula.global = read_prefix(f["global"], at + "/global");
    std::size_t j = 0;
    for (const auto& t : array_at(field(f, at, "triples"), at + "/triples")) {
      const std::string tat = at + "/triples/" + std::to_string(j++);
      object_at(t, tat);
      LogicalTriple triple;
      triple.left = read_operand(field(t, tat, "left"), tat + "/left");
      const auto op = operator_from_word(string_at(field(t, tat, "op"), tat + "/op"));
      const auto* binary = op ? std::get_if<BinaryOp>(&*op) : nullptr;
      if (!binary) violation(tat + "/op", "expected one of and, or, entail");
      triple.op = *binary;
      triple.right = read_operand(field(t, tat, "right"), tat + "/right");
      formula.triples.push_back(std::move(triple));
    }
    graph.formulae.push_back(std::move(formula));
  }

  for (const auto& [id, word] : object_at(field(doc, "", "degrees"), "/degrees").items()) {
    const std::string at = "/degrees/" + id;
    const auto degree = degree_from_word(string_at(word, at));
    if (!degree) violation(at, "unknown degree '" + word.get<std::string>() + "'");
    graph.degrees.emplace(id, *degree);
  }
  return graph;
}

std::vector<LogicMetagraph> read_json_corpus(const json& doc) {
  std::vector<LogicMetagraph> out;
  if (!doc.is_array()) {
    out.push_back(read_json(doc));
    return out;
  }
  for (std::size_t i = 0; i < doc.size(); ++i) {
    try {
      out.push_back(read_json(doc[i]));
    } catch (const Error& e) {
      // Re-anchor the pointer at the array element.
      std::string what = e.what();
      const std::string marker = "at /";
      if (const auto pos = what.find(marker); pos != std::string::npos)
        what.insert(pos + marker.size() - 1, "/" + std::to_string(i));
      throw Error(Errc::SchemaViolation, what.substr(what.find(": ") + 2));
    }
  }
  return out;
}

json write_json_corpus(const std::vector<LogicMetagraph>& corpus) {
  json out = json::array();
  for (const auto& g : corpus) out.push_back(write_json(g));
  return out;
}

}  // namespace metalogic
