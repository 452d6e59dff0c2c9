#include "metalogic/formula.hpp"

#include <tuple>

#include "metalogic/error.hpp"
#include "metalogic/operator_words.hpp"

namespace metalogic {

namespace {

CanonicalOperand canonical(const Operand& operand) {
  return {operand.variable, normalize(operand.prefix)};
}

// Symmetric operands are ordered by (variable id, prefix as bracket words).
bool operand_less(const CanonicalOperand& a, const CanonicalOperand& b) {
  const std::string pa = prefix_words(to_prefix(a.prefix));
  const std::string pb = prefix_words(to_prefix(b.prefix));
  return std::tie(a.variable, pa) < std::tie(b.variable, pb);
}

}  // namespace

CanonicalTriple canonicalize_triple(const LogicalTriple& triple) {
  CanonicalTriple out{canonical(triple.left), triple.op, canonical(triple.right),
                      !is_symmetric(triple.op)};
  if (!out.ordered && operand_less(out.right, out.left)) std::swap(out.left, out.right);
  return out;
}

LogicalTriple to_triple(const CanonicalTriple& triple) {
  return {{triple.left.variable, to_prefix(triple.left.prefix)},
          triple.op,
          {triple.right.variable, to_prefix(triple.right.prefix)}};
}

TripleMultiset triple_multiset(const Formula& formula) {
  TripleMultiset out;
  for (const auto& t : formula.triples) out.insert(canonicalize_triple(t));
  return out;
}

bool formulae_equal(const Formula& a, const Formula& b) {
  if (a.sentence != b.sentence)
    throw Error(Errc::SentenceMismatch,
                "comparing formula of '" + a.sentence + "' with '" + b.sentence + "'");
  return normalize(a.global) == normalize(b.global) && triple_multiset(a) == triple_multiset(b);
}

}  // namespace metalogic
