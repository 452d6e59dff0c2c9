#pragma once

#include <cstddef>
#include <span>
#include <string>

#include <nlohmann/json.hpp>

#include "metalogic/model.hpp"

namespace metalogic {

// Corpus label statistics. Totals merge by addition, so statistics of a
// corpus equal the sum over any partition of it.
struct CorpusStats {
  std::size_t passages = 0;
  std::size_t graphs = 0;
  std::size_t nodes = 0;
  std::size_t formulae = 0;  // formulae with at least one triple
  std::size_t rebuttal_graphs = 0;
  std::size_t multi_step_graphs = 0;
  std::size_t multi_premise_graphs = 0;
  std::size_t all_three_graphs = 0;  // rebuttal ∩ multi-step ∩ multi-premise

  std::size_t variables = 0;
  std::size_t binary_ops = 0;
  std::size_t global_unary_ops = 0;
  std::size_t local_unary_ops = 0;

  bool averages_defined() const { return passages > 0; }
  double avg_nodes() const { return per_passage(nodes); }
  double avg_formulae() const { return per_passage(formulae); }
  double avg_variables() const { return per_passage(variables); }
  double avg_binary() const { return per_passage(binary_ops); }
  double avg_global_unary() const { return per_passage(global_unary_ops); }
  double avg_local_unary() const { return per_passage(local_unary_ops); }

  CorpusStats& operator+=(const CorpusStats& other);
  friend bool operator==(const CorpusStats&, const CorpusStats&) = default;

 private:
  double per_passage(std::size_t total) const {
    return passages == 0 ? 0.0 : static_cast<double>(total) / static_cast<double>(passages);
  }
};

// Single-graph contribution. A multi-step graph has a support edge into a
// node that itself supports another; a multi-premise graph has a node with
// two or more incoming support edges.
CorpusStats graph_stats(const LogicMetagraph& graph);

// Throws Error(InvalidGraph) naming every offending passage id.
CorpusStats compute_stats(std::span<const LogicMetagraph> corpus);

// Full-precision JSON; averages are 0 with "averages_defined": false when
// the corpus is empty.
nlohmann::json to_json(const CorpusStats& stats);

// Two-row table with averages rounded to two decimals.
std::string render_table(const CorpusStats& stats);

}  // namespace metalogic
