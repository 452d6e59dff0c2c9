#pragma once

// Pluggable readers that turn dataset files into metagraphs. New dataset
// layouts are supported by registering another ImportAdapter.

#include <filesystem>
#include <iosfwd>
#include <utility>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "metalogic/model.hpp"

namespace metalogic {

class ImportAdapter {
 public:
  virtual ~ImportAdapter() = default;

  virtual std::string_view name() const = 0;
  virtual bool accepts(const std::filesystem::path& path) const = 0;
  // Throws Error(SchemaViolation) or Error(Syntax) on malformed content.
  virtual std::vector<LogicMetagraph> read(std::istream& in) const = 0;
};

// *.json: one canonical document or an array of them.
class CanonicalJsonAdapter final : public ImportAdapter {
 public:
  std::string_view name() const override { return "json"; }
  bool accepts(const std::filesystem::path& path) const override;
  std::vector<LogicMetagraph> read(std::istream& in) const override;
};

// *.jsonl: one canonical document per line.
class JsonLinesAdapter final : public ImportAdapter {
 public:
  std::string_view name() const override { return "jsonl"; }
  bool accepts(const std::filesystem::path& path) const override;
  std::vector<LogicMetagraph> read(std::istream& in) const override;
};

// *.lin / *.txt: "<passage-id> <linearized graph>" per line, parsed strictly
// with the sentence universe taken from the line itself.
class LinearizedLinesAdapter final : public ImportAdapter {
 public:
  std::string_view name() const override { return "linearized"; }
  bool accepts(const std::filesystem::path& path) const override;
  std::vector<LogicMetagraph> read(std::istream& in) const override;
};

class AdapterRegistry {
 public:
  static AdapterRegistry with_builtins();

  void add(std::unique_ptr<ImportAdapter> adapter);
  const ImportAdapter* find(const std::filesystem::path& path) const;

  // Throws Error(Io) when the file cannot be opened or no adapter accepts it.
  std::vector<LogicMetagraph> load(const std::filesystem::path& path) const;

 private:
  std::vector<std::unique_ptr<ImportAdapter>> adapters_;
};

// Files under each path (directories walked recursively, sorted) that some
// registered adapter accepts. Missing paths are returned as-is.
std::vector<std::filesystem::path> expand_paths(const std::vector<std::filesystem::path>& paths,
                                                const AdapterRegistry& registry);

// "<id> <text>" lines in file order; blank lines and lines starting with '#' are skipped.
std::vector<std::pair<std::string, std::string>> read_keyed_lines(std::istream& in);

}  // namespace metalogic
