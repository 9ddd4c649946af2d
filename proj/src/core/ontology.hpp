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

#ifndef ONTOWIND_CORE_ONTOLOGY_HPP
#define ONTOWIND_CORE_ONTOLOGY_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace ontowind {

using ConceptId = std::string;
using InstanceId = std::string;

enum class EntryKind { PrimaryLabel, Synonym };

std::string_view entry_kind_name(EntryKind kind) noexcept;
std::optional<EntryKind> parse_entry_kind(std::string_view name) noexcept;

// One surface phrase attached to a concept. `weight` is the fuzzy degree of
// membership of the phrase to the wind-energy domain, in [0,1].
struct LexicalEntry {
  std::string term;
  std::string language;  // upper-case code, e.g. "EN", "TR"
  EntryKind kind = EntryKind::PrimaryLabel;
  double weight = 1.0;

  friend bool operator==(const LexicalEntry&, const LexicalEntry&) = default;
};

struct Concept {
  ConceptId id;
  std::optional<ConceptId> parent;
  std::string label;
  std::vector<LexicalEntry> lexicon;

  // Primary label in `language`, if any.
  const LexicalEntry* primary_label(std::string_view language) const;

  friend bool operator==(const Concept&, const Concept&) = default;
};

// Well-known instance attribute keys.
namespace attr {
inline constexpr std::string_view kWebAddress = "webAddress";
inline constexpr std::string_view kTwitterAccount = "twitterAccount";
inline constexpr std::string_view kCountry = "country";
inline constexpr std::string_view kLabelEN = "labelEN";
}  // namespace attr

struct Instance {
  InstanceId id;
  ConceptId concept_id;
  // Open attribute map; unknown annotations are kept as opaque strings.
  std::map<std::string, std::string, std::less<>> attributes;

  const std::string* attribute(std::string_view key) const;

  friend bool operator==(const Instance&, const Instance&) = default;
};

// Immutable ontology value. Roots are the concepts without a parent, in
// declaration order. Construction never fails; use validate() to check the
// structural invariants.
class Ontology {
 public:
  Ontology() = default;
  Ontology(std::vector<Concept> concepts, std::vector<Instance> instances);

  const std::vector<Concept>& concepts() const { return concepts_; }
  const std::vector<Instance>& instances() const { return instances_; }
  const std::vector<ConceptId>& roots() const { return roots_; }

  const Concept* find_concept(std::string_view id) const;
  const Instance* find_instance(std::string_view id) const;

  // Direct children of `id`, sorted by id.
  std::vector<const Concept*> children(std::string_view id) const;

  // Semantic equality: same concepts and instances keyed by id, same roots.
  friend bool operator==(const Ontology& a, const Ontology& b);

 private:
  std::vector<Concept> concepts_;
  std::vector<Instance> instances_;
  std::vector<ConceptId> roots_;
  std::unordered_map<std::string, std::size_t> concept_index_;
  std::unordered_map<std::string, std::size_t> instance_index_;
  std::unordered_map<std::string, std::vector<std::size_t>> children_index_;
};

enum class Rule {
  InvalidId,
  DuplicateConceptId,
  DuplicateInstanceId,
  EmptyLabel,
  DanglingParent,
  ParentCycle,
  DuplicatePrimaryLabel,
  WeightOutOfRange,
  EmptyTerm,
  InvalidLanguage,
  UnknownInstanceConcept,
  InvalidCountry,
};

std::string_view rule_name(Rule rule) noexcept;

struct Violation {
  std::string subject;  // offending concept or instance id
  Rule rule;
  std::string message;

  friend bool operator==(const Violation&, const Violation&) = default;
};

std::vector<Violation> validate(const Ontology& ontology);

// A concept with its transitive children, children ordered by id.
struct ConceptTree {
  Concept node;
  std::vector<ConceptTree> children;

  std::size_t size() const;
};

// Throws Error(UnknownId) when `root` is absent.
ConceptTree subtree(const Ontology& ontology, std::string_view root);

// Instances typed by `concept` (and, when transitive, by any descendant),
// ordered by id. Throws Error(UnknownId) when `concept` is absent.
std::vector<Instance> instances_of(const Ontology& ontology,
                                   std::string_view concept_id,
                                   bool transitive);

bool is_valid_id(std::string_view id) noexcept;

}  // namespace ontowind

#endif  // ONTOWIND_CORE_ONTOLOGY_HPP
