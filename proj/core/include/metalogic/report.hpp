#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "metalogic/scorer.hpp"

namespace metalogic {

nlohmann::json to_json(const ScoreReport& report);

// Aligned plain-text tables in percent: the main Node/Step/Formula/Certainty/
// Overall block, then the per-type and per-operator breakdowns.
std::string render_table(const ScoreReport& report);

}  // namespace metalogic
