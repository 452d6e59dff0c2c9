#pragma once

// Canonical JSON form of a metagraph (schema: docs/metagraph.schema.json).
//
//   {"id": "...",
//    "sentences": [{"id": "sent1", "text": "...", "variables": [{"id": "v1", "span": [0, 12]}]}],
//    "edges": [{"premise": "sent1", "conclusion": "sent3", "kind": "support"}],
//    "formulae": [{"sentence": "sent3", "global": [],
//                  "triples": [{"left": {"var": "v2", "prefix": []}, "op": "and",
//                               "right": {"var": "v3", "prefix": ["necessary"]}}]}],
//    "degrees": {"sent1": "contingent"}}

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "metalogic/model.hpp"

namespace metalogic {

nlohmann::json write_json(const LogicMetagraph& graph);

// Throws Error(SchemaViolation) naming the offending JSON pointer.
LogicMetagraph read_json(const nlohmann::json& document);

// A single document or an array of documents.
std::vector<LogicMetagraph> read_json_corpus(const nlohmann::json& document);

nlohmann::json write_json_corpus(const std::vector<LogicMetagraph>& corpus);

}  // namespace metalogic
