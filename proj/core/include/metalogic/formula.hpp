#pragma once

// Order-free comparison of node formulae: modal prefixes reduced to their S5
// normal form, operands of ∧ and ∨ sorted, implication kept directed.

#include <compare>
#include <set>
#include <string>

#include "metalogic/modal.hpp"
#include "metalogic/model.hpp"

namespace metalogic {

struct CanonicalOperand {
  std::string variable;
  CanonicalPrefix prefix = CanonicalPrefix::Empty;
  friend auto operator<=>(const CanonicalOperand&, const CanonicalOperand&) = default;
};

struct CanonicalTriple {
  CanonicalOperand left;
  BinaryOp op = BinaryOp::Conjunction;
  CanonicalOperand right;
  bool ordered = false;  // true only for implication
  friend auto operator<=>(const CanonicalTriple&, const CanonicalTriple&) = default;
};

using TripleMultiset = std::multiset<CanonicalTriple>;

inline bool is_symmetric(BinaryOp op) { return op != BinaryOp::Implication; }

CanonicalTriple canonicalize_triple(const LogicalTriple& triple);

// Back to a plain triple carrying the canonical prefixes.
LogicalTriple to_triple(const CanonicalTriple& triple);

TripleMultiset triple_multiset(const Formula& formula);

// Throws Error(SentenceMismatch) when the formulae belong to different sentences.
bool formulae_equal(const Formula& a, const Formula& b);

}  // namespace metalogic
