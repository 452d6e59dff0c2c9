#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "metalogic/import.hpp"
#include "metalogic/model.hpp"

namespace metalogic {

enum class FileStatus { Ok, Invalid, IoError, SchemaError };

std::string_view file_status_name(FileStatus status);  // "ok", "invalid", "io_error", "schema_error"

struct GraphOutcome {
  std::string passage_id;
  ValidationReport violations;
};

struct FileOutcome {
  std::filesystem::path path;
  std::string adapter;  // empty when no adapter ran
  FileStatus status = FileStatus::Ok;
  std::string error;  // IO / schema message
  std::vector<GraphOutcome> graphs;
};

struct CorpusReport {
  std::vector<FileOutcome> files;
  std::map<std::string, std::size_t> histogram;  // violation name -> count
  std::vector<LogicMetagraph> graphs;            // every graph that loaded, valid or not

  bool ok() const;
  bool has_io_errors() const;
};

// Never throws for per-file problems; each file is loaded, validated and
// reported independently.
CorpusReport validate_corpus(const std::vector<std::filesystem::path>& paths,
                             const AdapterRegistry& registry = AdapterRegistry::with_builtins());

nlohmann::json to_json(const CorpusReport& report);
std::string render_table(const CorpusReport& report);

}  // namespace metalogic
