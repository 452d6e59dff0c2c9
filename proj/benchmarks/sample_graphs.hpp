#pragma once

#include <cstdint>

#include "metalogic/model.hpp"

namespace bench {

// A chain-shaped valid graph with `sentences` statements and one support
// edge into every statement after the first.
metalogic::LogicMetagraph chain(std::size_t sentences, std::uint64_t seed);

}  // namespace bench
