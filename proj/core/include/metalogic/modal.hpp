#pragma once

// S5 canonicalization of unary-operator strings over a single atom, with a
// Kripke-semantics oracle used to check the rewrite system.

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "metalogic/model.hpp"

namespace metalogic {

// The six irreducible prefixes of the rewrite system.
enum class CanonicalPrefix : std::uint8_t { Empty, Neg, Box, Diamond, NegBox, NegDiamond };

inline constexpr CanonicalPrefix kAllCanonicalPrefixes[] = {
    CanonicalPrefix::Empty, CanonicalPrefix::Neg,    CanonicalPrefix::Box,
    CanonicalPrefix::Diamond, CanonicalPrefix::NegBox, CanonicalPrefix::NegDiamond};

ModalPrefix to_prefix(CanonicalPrefix form);
std::string_view canonical_name(CanonicalPrefix form);

// Applies the leftmost applicable rule of
//   ¬¬→ε  □□→□  ◇◇→◇  □◇→◇  ◇□→□  □¬→¬◇  ◇¬→¬□
// or returns nullopt when the prefix is already irreducible.
std::optional<ModalPrefix> rewrite_once(const ModalPrefix& prefix);

CanonicalPrefix normalize(const ModalPrefix& prefix);

// Box→4, Diamond→3, Empty→2, NegBox→1, NegDiamond→0. A bare negation has no
// certainty slot of its own and reports Contingent.
CanonicalDegree reduce_to_degree(const ModalPrefix& prefix);
CanonicalDegree degree_of(CanonicalPrefix form);

// S5 frame: every world sees every world. One atom p.
struct KripkeModel {
  std::vector<bool> valuation;  // p at each world; size is the world count

  std::size_t worlds() const noexcept { return valuation.size(); }
};

// Truth of prefix(p) at each world of the model.
std::vector<bool> evaluate(const ModalPrefix& prefix, const KripkeModel& model);

// Every model with 1..max_worlds worlds (all valuations).
std::vector<KripkeModel> enumerate_models(std::size_t max_worlds);

inline constexpr std::size_t kOracleWorldBound = 3;

// a(p) and b(p) agree at every world of every model with at most
// kOracleWorldBound worlds.
bool semantically_equal(const ModalPrefix& a, const ModalPrefix& b);

}  // namespace metalogic
