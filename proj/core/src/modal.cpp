#include "metalogic/modal.hpp"

#include <algorithm>

namespace metalogic {

namespace {

using enum UnaryOp;

}  // namespace

ModalPrefix to_prefix(CanonicalPrefix form) {
  switch (form) {
    case CanonicalPrefix::Empty: return {};
    case CanonicalPrefix::Neg: return {{Negation}};
    case CanonicalPrefix::Box: return {{Box}};
    case CanonicalPrefix::Diamond: return {{Diamond}};
    case CanonicalPrefix::NegBox: return {{Negation, Box}};
    case CanonicalPrefix::NegDiamond: return {{Negation, Diamond}};
  }
  return {};
}

std::string_view canonical_name(CanonicalPrefix form) {
  switch (form) {
    case CanonicalPrefix::Empty: return "empty";
    case CanonicalPrefix::Neg: return "neg";
    case CanonicalPrefix::Box: return "box";
    case CanonicalPrefix::Diamond: return "diamond";
    case CanonicalPrefix::NegBox: return "neg_box";
    case CanonicalPrefix::NegDiamond: return "neg_diamond";
  }
  return "unknown";
}

std::optional<ModalPrefix> rewrite_once(const ModalPrefix& prefix) {
  const auto& ops = prefix.ops;
  for (std::size_t i = 0; i + 1 < ops.size(); ++i) {
    const UnaryOp a = ops[i], b = ops[i + 1];
    std::vector<UnaryOp> replacement;
    if (a == Negation && b == Negation) {
      replacement = {};
    } else if (a == Box && b == Box) {
      replacement = {Box};
    } else if (a == Diamond && b == Diamond) {
      replacement = {Diamond};
    } else if (a == Box && b == Diamond) {
      replacement = {Diamond};
    } else if (a == Diamond && b == Box) {
      replacement = {Box};
    } else if (a == Box && b == Negation) {
      replacement = {Negation, Diamond};
    } else if (a == Diamond && b == Negation) {
      replacement = {Negation, Box};
    } else {
      continue;
    }
    ModalPrefix out;
    out.ops.reserve(ops.size());
    out.ops.insert(out.ops.end(), ops.begin(), ops.begin() + static_cast<std::ptrdiff_t>(i));
    out.ops.insert(out.ops.end(), replacement.begin(), replacement.end());
    out.ops.insert(out.ops.end(), ops.begin() + static_cast<std::ptrdiff_t>(i + 2), ops.end());
    return out;
  }
  return std::nullopt;
}

CanonicalPrefix normalize(const ModalPrefix& prefix) {
  ModalPrefix current = prefix;
  while (auto next = rewrite_once(current)) current = std::move(*next);

  const auto& ops = current.ops;
  if (ops.empty()) return CanonicalPrefix::Empty;
  if (ops.size() == 1) {
    switch (ops[0]) {
      case Negation: return CanonicalPrefix::Neg;
      case Box: return CanonicalPrefix::Box;
      case Diamond: return CanonicalPrefix::Diamond;
    }
  }
  // Irreducible strings of length two are exactly ¬□ and ¬◇.
  return ops[1] == Box ? CanonicalPrefix::NegBox : CanonicalPrefix::NegDiamond;
}

CanonicalDegree degree_of(CanonicalPrefix form) {
  switch (form) {
    case CanonicalPrefix::Box: return CanonicalDegree::Necessary;
    case CanonicalPrefix::Diamond: return CanonicalDegree::Possible;
    case CanonicalPrefix::Empty: return CanonicalDegree::Contingent;
    case CanonicalPrefix::Neg: return CanonicalDegree::Contingent;
    case CanonicalPrefix::NegBox: return CanonicalDegree::Unnecessary;
    case CanonicalPrefix::NegDiamond: return CanonicalDegree::Impossible;
  }
  return CanonicalDegree::Contingent;
}

CanonicalDegree reduce_to_degree(const ModalPrefix& prefix) { return degree_of(normalize(prefix)); }

std::vector<bool> evaluate(const ModalPrefix& prefix, const KripkeModel& model) {
  std::vector<bool> truth = model.valuation;
  // Innermost operator first.
  for (auto it = prefix.ops.rbegin(); it != prefix.ops.rend(); ++it) {
    switch (*it) {
      case Negation:
        truth.flip();
        break;
      case Box: {
        const bool all = std::all_of(truth.begin(), truth.end(), [](bool b) { return b; });
        std::fill(truth.begin(), truth.end(), all);
        break;
      }
      case Diamond: {
        const bool any = std::any_of(truth.begin(), truth.end(), [](bool b) { return b; });
        std::fill(truth.begin(), truth.end(), any);
        break;
      }
    }
  }
  return truth;
}

std::vector<KripkeModel> enumerate_models(std::size_t max_worlds) {
  std::vector<KripkeModel> models;
  for (std::size_t n = 1; n <= max_worlds; ++n) {
    for (std::size_t bits = 0; bits < (std::size_t{1} << n); ++bits) {
      KripkeModel m;
      m.valuation.resize(n);
      for (std::size_t w = 0; w < n; ++w) m.valuation[w] = ((bits >> w) & 1U) != 0;
      models.push_back(std::move(m));
    }
  }
  return models;
}

bool semantically_equal(const ModalPrefix& a, const ModalPrefix& b) {
  static const std::vector<KripkeModel> models = enumerate_models(kOracleWorldBound);
  return std::all_of(models.begin(), models.end(),
                     [&](const KripkeModel& m) { return evaluate(a, m) == evaluate(b, m); });
}

}  // namespace metalogic
