#pragma once

// The single word table shared by the linearized codec, the JSON codec and
// the CLI. Operator words map one-to-one onto operators.

#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "metalogic/model.hpp"

namespace metalogic {

using OperatorToken = std::variant<UnaryOp, BinaryOp>;

struct OperatorWord {
  OperatorToken op;
  std::string_view word;    // "necessary"; bracketed form is "[necessary]"
  std::string_view symbol;  // "□"
};

inline constexpr OperatorWord kOperatorWords[] = {
    {UnaryOp::Box, "necessary", "□"},
    {UnaryOp::Diamond, "possible", "◇"},
    {UnaryOp::Negation, "negative", "¬"},
    {BinaryOp::Conjunction, "and", "∧"},
    {BinaryOp::Disjunction, "or", "∨"},
    {BinaryOp::Implication, "entail", "→"},
};

std::string_view word_of(UnaryOp op);
std::string_view word_of(BinaryOp op);
std::string_view symbol_of(UnaryOp op);
std::string_view symbol_of(BinaryOp op);

// Accepts the bare word ("and"); matching is exact and case-sensitive.
std::optional<OperatorToken> operator_from_word(std::string_view word);

// "[negative] [possible]" for ¬◇; empty string for the empty prefix.
std::string prefix_words(const ModalPrefix& prefix);
std::string prefix_symbols(const ModalPrefix& prefix);

std::string_view degree_word(CanonicalDegree degree);
std::optional<CanonicalDegree> degree_from_word(std::string_view word);

std::string_view edge_arrow(EdgeType kind);
std::string_view edge_kind_name(EdgeType kind);
std::optional<EdgeType> edge_kind_from_name(std::string_view name);

}  // namespace metalogic
