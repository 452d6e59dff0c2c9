#pragma once

#include <string_view>
#include <vector>

#include "metalogic/model.hpp"

namespace metalogic {

// Maximal runs of non-space characters, as character offsets.
std::vector<CharSpan> whitespace_tokens(std::string_view text);

}  // namespace metalogic
