#include "metalogic/operator_words.hpp"

namespace metalogic {

namespace {

template <typename Op>
const OperatorWord* entry_for(Op op) {
  for (const auto& e : kOperatorWords)
    if (const auto* v = std::get_if<Op>(&e.op); v && *v == op) return &e;
  return nullptr;
}

}  // namespace

std::string_view word_of(UnaryOp op) { return entry_for(op)->word; }
std::string_view word_of(BinaryOp op) { return entry_for(op)->word; }
std::string_view symbol_of(UnaryOp op) { return entry_for(op)->symbol; }
std::string_view symbol_of(BinaryOp op) { return entry_for(op)->symbol; }

std::optional<OperatorToken> operator_from_word(std::string_view word) {
  for (const auto& e : kOperatorWords)
    if (e.word == word) return e.op;
  return std::nullopt;
}

std::string prefix_words(const ModalPrefix& prefix) {
  std::string out;
  for (const UnaryOp op : prefix.ops) {
    if (!out.empty()) out += ' ';
    out += '[';
    out += word_of(op);
    out += ']';
  }
  return out;
}

std::string prefix_symbols(const ModalPrefix& prefix) {
  std::string out;
  for (const UnaryOp op : prefix.ops) out += symbol_of(op);
  return out;
}

std::string_view degree_word(CanonicalDegree degree) {
  switch (degree) {
    case CanonicalDegree::Necessary: return "necessary";
    case CanonicalDegree::Possible: return "possible";
    case CanonicalDegree::Contingent: return "contingent";
    case CanonicalDegree::Unnecessary: return "unnecessary";
    case CanonicalDegree::Impossible: return "impossible";
  }
  return "contingent";
}

std::optional<CanonicalDegree> degree_from_word(std::string_view word) {
  for (const CanonicalDegree d : kAllDegrees)
    if (degree_word(d) == word) return d;
  return std::nullopt;
}

std::string_view edge_arrow(EdgeType kind) { return kind == EdgeType::Support ? "->" : "=>"; }

std::string_view edge_kind_name(EdgeType kind) {
  return kind == EdgeType::Support ? "support" : "rebut";
}

std::optional<EdgeType> edge_kind_from_name(std::string_view name) {
  if (name == "support") return EdgeType::Support;
  if (name == "rebut") return EdgeType::Rebut;
  return std::nullopt;
}

}  // namespace metalogic
