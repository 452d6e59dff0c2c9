#include "metalogic/text.hpp"

#include <cctype>

namespace metalogic {

std::vector<CharSpan> whitespace_tokens(std::string_view text) {
  std::vector<CharSpan> out;
  std::size_t i = 0;
  auto space = [&](std::size_t k) { return std::isspace(static_cast<unsigned char>(text[k])) != 0; };
  while (i < text.size()) {
    while (i < text.size() && space(i)) ++i;
    if (i >= text.size()) break;
    const std::size_t start = i;
    while (i < text.size() && !space(i)) ++i;
    out.push_back({start, i});
  }
  return out;
}

}  // namespace metalogic
