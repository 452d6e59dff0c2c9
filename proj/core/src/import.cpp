#include "metalogic/import.hpp"

#include <algorithm>
#include <fstream>
#include <istream>

#include <nlohmann/json.hpp>

#include "metalogic/error.hpp"
#include "metalogic/json_codec.hpp"
#include "metalogic/linearized.hpp"

namespace metalogic {

namespace fs = std::filesystem;

namespace {

bool has_extension(const fs::path& path, std::initializer_list<std::string_view> extensions) {
  const std::string ext = path.extension().string();
  return std::any_of(extensions.begin(), extensions.end(), [&](std::string_view e) { return ext == e; });
}

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

}  // namespace

bool CanonicalJsonAdapter::accepts(const fs::path& path) const { return has_extension(path, {".json"}); }

std::vector<LogicMetagraph> CanonicalJsonAdapter::read(std::istream& in) const {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(Errc::SchemaViolation, std::string("at /: not valid JSON (") + e.what() + ")");
  }
  return read_json_corpus(doc);
}

bool JsonLinesAdapter::accepts(const fs::path& path) const { return has_extension(path, {".jsonl"}); }

std::vector<LogicMetagraph> JsonLinesAdapter::read(std::istream& in) const {
  std::vector<LogicMetagraph> out;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (trim(line).empty()) continue;
    try {
      out.push_back(read_json(nlohmann::json::parse(line)));
    } catch (const nlohmann::json::parse_error& e) {
      throw Error(Errc::SchemaViolation, "line " + std::to_string(number) + ": not valid JSON");
    } catch (const Error& e) {
      throw Error(e.code(), "line " + std::to_string(number) + ": " + e.what());
    }
  }
  return out;
}

bool LinearizedLinesAdapter::accepts(const fs::path& path) const {
  return has_extension(path, {".lin", ".txt"});
}

std::vector<LogicMetagraph> LinearizedLinesAdapter::read(std::istream& in) const {
  std::vector<LogicMetagraph> out;
  for (const auto& [id, text] : read_keyed_lines(in)) {
    auto outcome = parse_linearized(text, ParseMode::Strict, id);
    if (!outcome.clean()) {
      const auto& d = outcome.diagnostics.front();
      throw Error(Errc::Syntax, "passage '" + id + "' at " + std::to_string(d.position) + ": " +
                                    std::string(diag_name(d.code)) + " " + d.message);
    }
    out.push_back(std::move(*outcome.graph));
  }
  return out;
}

AdapterRegistry AdapterRegistry::with_builtins() {
  AdapterRegistry registry;
  registry.add(std::make_unique<CanonicalJsonAdapter>());
  registry.add(std::make_unique<JsonLinesAdapter>());
  registry.add(std::make_unique<LinearizedLinesAdapter>());
  return registry;
}

void AdapterRegistry::add(std::unique_ptr<ImportAdapter> adapter) { adapters_.push_back(std::move(adapter)); }

const ImportAdapter* AdapterRegistry::find(const fs::path& path) const {
  for (const auto& a : adapters_)
    if (a->accepts(path)) return a.get();
  return nullptr;
}

std::vector<LogicMetagraph> AdapterRegistry::load(const fs::path& path) const {
  const ImportAdapter* adapter = find(path);
  if (!adapter) throw Error(Errc::Io, "no reader for '" + path.string() + "'");
  std::ifstream in(path);
  if (!in) throw Error(Errc::Io, "cannot open '" + path.string() + "'");
  return adapter->read(in);
}

std::vector<fs::path> expand_paths(const std::vector<fs::path>& paths, const AdapterRegistry& registry) {
  std::vector<fs::path> out;
  for (const auto& p : paths) {
    std::error_code ec;
    if (fs::is_directory(p, ec)) {
      std::vector<fs::path> found;
      for (const auto& entry : fs::recursive_directory_iterator(p, ec))
        if (entry.is_regular_file() && registry.find(entry.path())) found.push_back(entry.path());
      std::sort(found.begin(), found.end());
      out.insert(out.end(), found.begin(), found.end());
    } else {
      out.push_back(p);
    }
  }
  return out;
}

std::vector<std::pair<std::string, std::string>> read_keyed_lines(std::istream& in) {
  std::vector<std::pair<std::string, std::string>> out;
  std::string line;
  while (std::getline(in, line)) {
    const std::string t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    const auto split = t.find_first_of(" \t");
    if (split == std::string::npos) {
      out.emplace_back(t, "");
    } else {
      out.emplace_back(t.substr(0, split), trim(std::string_view(t).substr(split)));
    }
  }
  return out;
}

}  // namespace metalogic
