#include "metalogic/conllu.hpp"

#include <charconv>
#include <sstream>

#include "metalogic/error.hpp"

namespace metalogic {

namespace {

std::vector<std::string> split_tabs(const std::string& line) {
  std::vector<std::string> cols;
  std::size_t start = 0;
  while (true) {
    const auto tab = line.find('\t', start);
    cols.push_back(line.substr(start, tab == std::string::npos ? std::string::npos : tab - start));
    if (tab == std::string::npos) break;
    start = tab + 1;
  }
  return cols;
}

std::optional<std::size_t> to_index(std::string_view s) {
  std::size_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

std::string comment_value(const std::string& line, std::string_view key) {
  // "# key = value"
  auto body = std::string_view(line).substr(1);
  while (!body.empty() && body.front() == ' ') body.remove_prefix(1);
  if (body.substr(0, key.size()) != key) return {};
  body.remove_prefix(key.size());
  while (!body.empty() && body.front() == ' ') body.remove_prefix(1);
  if (body.empty() || body.front() != '=') return {};
  body.remove_prefix(1);
  while (!body.empty() && body.front() == ' ') body.remove_prefix(1);
  return std::string(body);
}

}  // namespace

std::size_t DependencyParse::root() const {
  for (std::size_t i = 0; i < tokens.size(); ++i)
    if (!tokens[i].head) return i;
  throw Error(Errc::MalformedRow, "parse has no root");
}

std::size_t DependencyParse::hops_to_root(std::size_t token) const {
  std::size_t hops = 0;
  std::size_t current = token;
  while (tokens.at(current).head) {
    current = *tokens[current].head;
    if (++hops > tokens.size()) throw Error(Errc::MalformedRow, "head chain does not reach the root");
  }
  return hops;
}

void validate_parse(const DependencyParse& parse) {
  std::size_t roots = 0;
  for (std::size_t i = 0; i < parse.tokens.size(); ++i) {
    const auto& head = parse.tokens[i].head;
    if (!head) {
      ++roots;
    } else if (*head >= parse.tokens.size() || *head == i) {
      throw Error(Errc::MalformedRow, "token " + std::to_string(i + 1) + " has an invalid head");
    }
  }
  if (roots > 1) throw Error(Errc::MultipleRoots, std::to_string(roots) + " roots in one parse");
  if (roots == 0 && !parse.tokens.empty()) throw Error(Errc::MalformedRow, "parse has no root");
  for (std::size_t i = 0; i < parse.tokens.size(); ++i) parse.hops_to_root(i);
}

std::vector<DependencyParse> ingest_conllu(std::string_view text) {
  std::vector<DependencyParse> out;
  DependencyParse current;
  bool open = false;
  std::size_t block_start = 0;

  auto flush = [&] {
    if (open && !current.tokens.empty()) {
      try {
        validate_parse(current);
      } catch (const Error& e) {
        throw Error(e.code(), "sentence starting at line " + std::to_string(block_start) + ": " + e.what());
      }
      out.push_back(std::move(current));
    }
    current = {};
    open = false;
  };

  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) {
      flush();
      continue;
    }
    if (!open) {
      open = true;
      block_start = number;
    }
    if (line.front() == '#') {
      if (auto v = comment_value(line, "sent_id"); !v.empty()) current.sent_id = v;
      if (auto v = comment_value(line, "text"); !v.empty()) current.text = v;
      continue;
    }
    const auto cols = split_tabs(line);
    const std::string where = "line " + std::to_string(number);
    if (cols.size() != 10) throw Error(Errc::MalformedRow, where + ": expected 10 columns, got " + std::to_string(cols.size()));
    if (cols[0].find_first_of("-.") != std::string::npos) continue;
    const auto id = to_index(cols[0]);
    if (!id || *id != current.tokens.size() + 1)
      throw Error(Errc::MalformedRow, where + ": token id '" + cols[0] + "' out of sequence");
    const auto head = to_index(cols[6]);
    if (!head) throw Error(Errc::MalformedRow, where + ": head '" + cols[6] + "' is not an integer");
    DependencyToken token;
    token.form = cols[1];
    token.lemma = cols[2] == "_" ? "" : cols[2];
    if (*head > 0) token.head = *head - 1;
    token.relation = cols[7];
    current.tokens.push_back(std::move(token));
  }
  flush();

  return out;
}

}  // namespace metalogic
