// Copyright 2026 The OntoWind Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// JSON encodings shared by the canonical format, the C API and the HTTP
// service.

#ifndef ONTOWIND_CORE_JSON_CODEC_HPP
#define ONTOWIND_CORE_JSON_CODEC_HPP

#include <json.hpp>

#include <string>
#include <vector>

#include "core/categorizer.hpp"
#include "core/corpus.hpp"
#include "core/eval.hpp"
#include "core/ngram.hpp"
#include "core/ontology.hpp"

namespace ontowind {

// Serialises with sorted keys; floating-point numbers use format_weight so
// the bytes are stable. indent < 0 yields a single line.
std::string dump_canonical(const nlohmann::json& value, int indent = 2);

std::vector<const Concept*> concepts_in_canonical_order(const Ontology& ontology);

nlohmann::json to_json(const LexicalEntry& entry);
nlohmann::json to_json(const Concept& concept_value);
nlohmann::json to_json(const Instance& instance);
nlohmann::json to_json(const ConceptTree& tree);
nlohmann::json to_json(const Violation& violation);
nlohmann::json to_json(const std::vector<Violation>& violations);

nlohmann::json to_json(const ConceptMatch& match);
nlohmann::json to_json(const CategorizationResult& result);
CategorizationResult categorization_result_from_json(const nlohmann::json& j);

// Accepts {id?, title?, abstractText?, keywords?, body?, sourceUrl?}; throws
// Error(Schema) on wrong types.
Document document_from_json(const nlohmann::json& j);
nlohmann::json to_json(const Document& doc);

nlohmann::json to_json(const NgramStats& stats);
nlohmann::json to_json(const ScaffoldEntry& entry);

nlohmann::json to_json(const ConfusionMatrix& cm);
nlohmann::json to_json(const ComparisonReport& report);

}  // namespace ontowind

#endif  // ONTOWIND_CORE_JSON_CODEC_HPP
