#include "metalogic/corpus.hpp"

#include <sstream>

#include "metalogic/error.hpp"

namespace metalogic {

std::string_view file_status_name(FileStatus status) {
  switch (status) {
    case FileStatus::Ok: return "ok";
    case FileStatus::Invalid: return "invalid";
    case FileStatus::IoError: return "io_error";
    case FileStatus::SchemaError: return "schema_error";
  }
  return "unknown";
}

bool CorpusReport::ok() const {
  for (const auto& f : files)
    if (f.status != FileStatus::Ok) return false;
  return true;
}

bool CorpusReport::has_io_errors() const {
  for (const auto& f : files)
    if (f.status == FileStatus::IoError) return true;
  return false;
}

namespace {

FileOutcome check_file(const std::filesystem::path& path, const AdapterRegistry& registry,
                       std::vector<LogicMetagraph>& loaded) {
  FileOutcome out;
  out.path = path;
  if (const auto* adapter = registry.find(path)) out.adapter = adapter->name();
  std::vector<LogicMetagraph> graphs;
  try {
    graphs = registry.load(path);
  } catch (const Error& e) {
    out.status = e.code() == Errc::Io ? FileStatus::IoError : FileStatus::SchemaError;
    out.error = e.what();
    return out;
  } catch (const std::exception& e) {
    out.status = FileStatus::SchemaError;
    out.error = e.what();
    return out;
  }
  for (auto& g : graphs) {
    auto violations = validate_graph(g);
    if (!violations.empty()) out.status = FileStatus::Invalid;
    out.graphs.push_back({g.passage.id, std::move(violations)});
    loaded.push_back(std::move(g));
  }
  return out;
}

}  // namespace

CorpusReport validate_corpus(const std::vector<std::filesystem::path>& paths, const AdapterRegistry& registry) {
  CorpusReport report;
  for (const auto& path : expand_paths(paths, registry)) {
    report.files.push_back(check_file(path, registry, report.graphs));
    for (const auto& g : report.files.back().graphs)
      for (const auto& v : g.violations) ++report.histogram[std::string(violation_name(v.code))];
  }
  return report;
}

nlohmann::json to_json(const CorpusReport& report) {
  auto files = nlohmann::json::array();
  for (const auto& f : report.files) {
    nlohmann::json jf = {{"path", f.path.generic_string()}, {"status", file_status_name(f.status)}};
    if (!f.adapter.empty()) jf["format"] = f.adapter;
    if (!f.error.empty()) jf["error"] = f.error;
    auto graphs = nlohmann::json::array();
    for (const auto& g : f.graphs) {
      auto vs = nlohmann::json::array();
      for (const auto& v : g.violations)
        vs.push_back({{"code", violation_name(v.code)}, {"subject", v.subject}, {"message", v.message}});
      graphs.push_back({{"id", g.passage_id}, {"violations", vs}});
    }
    jf["graphs"] = graphs;
    files.push_back(jf);
  }
  nlohmann::json histogram = nlohmann::json::object();
  for (const auto& [name, n] : report.histogram) histogram[name] = n;
  return {{"ok", report.ok()}, {"files", files}, {"histogram", histogram}, {"graphs", report.graphs.size()}};
}

std::string render_table(const CorpusReport& report) {
  std::ostringstream os;
  for (const auto& f : report.files) {
    os << file_status_name(f.status) << '\t' << f.path.generic_string();
    if (!f.error.empty()) os << '\t' << f.error;
    os << '\n';
    for (const auto& g : f.graphs)
      for (const auto& v : g.violations)
        os << "  " << g.passage_id << '\t' << violation_name(v.code) << '\t' << v.subject << '\t' << v.message << '\n';
  }
  os << "files: " << report.files.size() << ", graphs: " << report.graphs.size();
  for (const auto& [name, n] : report.histogram) os << ", " << name << ": " << n;
  os << '\n';
  return os.str();
}

}  // namespace metalogic
