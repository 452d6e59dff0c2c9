#include "metalogic/report.hpp"

#include <iomanip>
#include <sstream>
#include <vector>

namespace metalogic {

using nlohmann::json;

namespace {

json optional_json(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

std::string percent(std::optional<double> v) {
  if (!v) return "-";
  std::ostringstream os;
  os << std::fixed << std::setprecision(1) << (*v * 100.0);
  return os.str();
}

// Display width of a UTF-8 string, counting code points.
std::size_t width(const std::string& s) {
  std::size_t n = 0;
  for (const unsigned char c : s)
    if ((c & 0xC0) != 0x80) ++n;
  return n;
}

std::string render_grid(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> widths;
  for (const auto& row : rows) {
    if (widths.size() < row.size()) widths.resize(row.size(), 0);
    for (std::size_t i = 0; i < row.size(); ++i) widths[i] = std::max(widths[i], width(row[i]));
  }
  std::ostringstream os;
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i > 0) line += "  ";
      line += std::string(widths[i] - width(row[i]), ' ') + row[i];
    }
    os << line << '\n';
  }
  return os.str();
}

}  // namespace

json to_json(const ScoreReport& r) {
  json per_operator = json::object();
  for (const auto& [op, f1] : r.per_operator_f1) per_operator[std::string(operator_class_key(op))] = f1;
  json errors = json::array();
  for (const auto& e : r.errors) errors.push_back({{"passage", e.passage_id}, {"message", e.message}});
  return {
      {"samples", r.samples},
      {"node", {{"f1", r.node_f1}, {"allcorrect", r.node_allcorrect}}},
      {"step", {{"f1", r.step_f1}, {"allcorrect", r.step_allcorrect}}},
      {"formula", {{"f1", r.formula_f1}, {"allcorrect", r.formula_allcorrect}}},
      {"certainty",
       {{"accuracy", r.certainty_acc}, {"allcorrect", r.certainty_allcorrect}, {"macro_f1", r.certainty_macro_f1}}},
      {"overall", {{"allcorrect", r.overall_allcorrect}}},
      {"support", {{"f1", optional_json(r.support_f1)}, {"allcorrect", optional_json(r.support_allcorrect)}}},
      {"rebut", {{"f1", optional_json(r.rebut_f1)}, {"allcorrect", optional_json(r.rebut_allcorrect)}}},
      {"per_operator_f1", std::move(per_operator)},
      {"diagnostics", r.diagnostics},
      {"errors", std::move(errors)},
  };
}

std::string render_table(const ScoreReport& r) {
  std::string out = render_grid({
      {"", "Node", "", "Step", "", "Formula", "", "Certainty", "", "", "Overall"},
      {"", "F1", "All", "F1", "All", "F1", "All", "Acc", "All", "F1*", "All"},
      {"score", percent(r.node_f1), percent(r.node_allcorrect), percent(r.step_f1), percent(r.step_allcorrect),
       percent(r.formula_f1), percent(r.formula_allcorrect), percent(r.certainty_acc),
       percent(r.certainty_allcorrect), percent(r.certainty_macro_f1), percent(r.overall_allcorrect)},
  });
  out += '\n';

  std::vector<std::string> header{"", "Support", "", "Rebut", ""};
  std::vector<std::string> sub{"", "F1", "All", "F1", "All"};
  std::vector<std::string> row{"score", percent(r.support_f1), percent(r.support_allcorrect), percent(r.rebut_f1),
                               percent(r.rebut_allcorrect)};
  for (const auto op : kAllOperatorClasses) {
    header.push_back(op == OperatorClass::Implication ? "Operators" : "");
    sub.emplace_back(operator_class_symbol(op));
    const auto it = r.per_operator_f1.find(op);
    row.push_back(it == r.per_operator_f1.end() ? "-" : percent(it->second));
  }
  out += render_grid({header, sub, row});
  out += "\nsamples: " + std::to_string(r.samples) + "  diagnostics: " + std::to_string(r.diagnostics) +
         "  errors: " + std::to_string(r.errors.size()) + '\n';
  return out;
}

}  // namespace metalogic
