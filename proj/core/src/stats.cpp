#include "metalogic/stats.hpp"

#include <iomanip>
#include <map>
#include <sstream>

#include "metalogic/error.hpp"

namespace metalogic {

CorpusStats& CorpusStats::operator+=(const CorpusStats& o) {
  passages += o.passages;
  graphs += o.graphs;
  nodes += o.nodes;
  formulae += o.formulae;
  rebuttal_graphs += o.rebuttal_graphs;
  multi_step_graphs += o.multi_step_graphs;
  multi_premise_graphs += o.multi_premise_graphs;
  all_three_graphs += o.all_three_graphs;
  variables += o.variables;
  binary_ops += o.binary_ops;
  global_unary_ops += o.global_unary_ops;
  local_unary_ops += o.local_unary_ops;
  return *this;
}

CorpusStats graph_stats(const LogicMetagraph& graph) {
  CorpusStats s;
  s.passages = 1;
  s.graphs = 1;
  s.nodes = graph.passage.sentences.size();
  for (const auto& sentence : graph.passage.sentences) s.variables += sentence.variables.size();
  for (const auto& f : graph.formulae) {
    if (!f.triples.empty()) ++s.formulae;
    s.binary_ops += f.triples.size();
    s.global_unary_ops += f.global.size();
    for (const auto& t : f.triples) s.local_unary_ops += t.left.prefix.size() + t.right.prefix.size();
  }

  std::map<std::string, int> support_in, support_out;
  bool rebuttal = false;
  for (const auto& e : graph.edges) {
    if (e.kind == EdgeType::Rebut) {
      rebuttal = true;
    } else {
      ++support_out[e.premise];
      ++support_in[e.conclusion];
    }
  }
  bool multi_step = false;
  for (const auto& e : graph.edges)
    if (e.kind == EdgeType::Support && support_out[e.conclusion] > 0) multi_step = true;
  bool multi_premise = false;
  for (const auto& [id, n] : support_in)
    if (n >= 2) multi_premise = true;

  s.rebuttal_graphs = rebuttal ? 1 : 0;
  s.multi_step_graphs = multi_step ? 1 : 0;
  s.multi_premise_graphs = multi_premise ? 1 : 0;
  s.all_three_graphs = (rebuttal && multi_step && multi_premise) ? 1 : 0;
  return s;
}

CorpusStats compute_stats(std::span<const LogicMetagraph> corpus) {
  std::string invalid;
  CorpusStats total;
  for (const auto& g : corpus) {
    if (!is_valid(g)) {
      invalid += (invalid.empty() ? "" : ", ") + g.passage.id;
      continue;
    }
    total += graph_stats(g);
  }
  if (!invalid.empty()) throw Error(Errc::InvalidGraph, "invalid graphs: " + invalid);
  return total;
}

nlohmann::json to_json(const CorpusStats& s) {
  return {
      {"counts",
       {{"passages", s.passages},
        {"graphs", s.graphs},
        {"nodes", s.nodes},
        {"formulae", s.formulae},
        {"rebuttal_graphs", s.rebuttal_graphs},
        {"multi_step_graphs", s.multi_step_graphs},
        {"multi_premise_graphs", s.multi_premise_graphs},
        {"rebuttal_multi_step_multi_premise", s.all_three_graphs}}},
      {"totals",
       {{"variables", s.variables},
        {"binary_ops", s.binary_ops},
        {"global_unary_ops", s.global_unary_ops},
        {"local_unary_ops", s.local_unary_ops}}},
      {"averages",
       {{"nodes", s.avg_nodes()},
        {"formulae", s.avg_formulae()},
        {"variables", s.avg_variables()},
        {"binary_ops", s.avg_binary()},
        {"global_unary_ops", s.avg_global_unary()},
        {"local_unary_ops", s.avg_local_unary()}}},
      {"averages_defined", s.averages_defined()},
  };
}

std::string render_table(const CorpusStats& s) {
  std::ostringstream os;
  auto fixed2 = [](double v) {
    std::ostringstream o;
    o << std::fixed << std::setprecision(2) << v;
    return o.str();
  };
  os << std::right;
  os << std::setw(9) << "Passage" << std::setw(9) << "Graph" << std::setw(9) << "Node" << std::setw(9) << "Form"
     << std::setw(9) << "Reb" << std::setw(12) << "Multi-step" << std::setw(15) << "Multi-premise" << std::setw(9)
     << "All3" << '\n';
  os << std::setw(9) << s.passages << std::setw(9) << s.graphs << std::setw(9) << s.nodes << std::setw(9)
     << s.formulae << std::setw(9) << s.rebuttal_graphs << std::setw(12) << s.multi_step_graphs << std::setw(15)
     << s.multi_premise_graphs << std::setw(9) << s.all_three_graphs << "\n\n";
  os << std::setw(9) << "AvgNode" << std::setw(9) << "AvgForm" << std::setw(9) << "AvgVar" << std::setw(9)
     << "AvgBin" << std::setw(9) << "Global" << std::setw(9) << "Local" << '\n';
  os << std::setw(9) << fixed2(s.avg_nodes()) << std::setw(9) << fixed2(s.avg_formulae()) << std::setw(9)
     << fixed2(s.avg_variables()) << std::setw(9) << fixed2(s.avg_binary()) << std::setw(9)
     << fixed2(s.avg_global_unary()) << std::setw(9) << fixed2(s.avg_local_unary()) << '\n';
  if (!s.averages_defined()) os << "(empty corpus: averages undefined)\n";
  return os.str();
}

}  // namespace metalogic
