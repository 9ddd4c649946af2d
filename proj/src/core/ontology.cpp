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

#include "core/ontology.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <unordered_set>

#include "core/error.hpp"

namespace ontowind {

std::string_view entry_kind_name(EntryKind kind) noexcept {
  return kind == EntryKind::PrimaryLabel ? "PrimaryLabel" : "Synonym";
}

std::optional<EntryKind> parse_entry_kind(std::string_view name) noexcept {
  if (name == "PrimaryLabel") return EntryKind::PrimaryLabel;
  if (name == "Synonym") return EntryKind::Synonym;
  return std::nullopt;
}

const LexicalEntry* Concept::primary_label(std::string_view language) const {
  for (const auto& e : lexicon)
    if (e.kind == EntryKind::PrimaryLabel && e.language == language) return &e;
  return nullptr;
}

const std::string* Instance::attribute(std::string_view key) const {
  auto it = attributes.find(key);
  return it == attributes.end() ? nullptr : &it->second;
}

Ontology::Ontology(std::vector<Concept> concepts, std::vector<Instance> instances)
    : concepts_(std::move(concepts)), instances_(std::move(instances)) {
  for (auto& c : concepts_) {
    std::stable_sort(c.lexicon.begin(), c.lexicon.end(),
                     [](const LexicalEntry& a, const LexicalEntry& b) {
                       if (a.kind != b.kind) return a.kind < b.kind;
                       return a.language < b.language;
                     });
  }
  for (std::size_t i = 0; i < concepts_.size(); ++i) {
    const auto& c = concepts_[i];
    concept_index_.try_emplace(c.id, i);
    if (c.parent)
      children_index_[*c.parent].push_back(i);
    else
      roots_.push_back(c.id);
  }
  for (auto& [parent, kids] : children_index_) {
    std::sort(kids.begin(), kids.end(), [this](std::size_t a, std::size_t b) {
      return concepts_[a].id < concepts_[b].id;
    });
  }
  for (std::size_t i = 0; i < instances_.size(); ++i)
    instance_index_.try_emplace(instances_[i].id, i);
}

const Concept* Ontology::find_concept(std::string_view id) const {
  auto it = concept_index_.find(std::string(id));
  return it == concept_index_.end() ? nullptr : &concepts_[it->second];
}

const Instance* Ontology::find_instance(std::string_view id) const {
  auto it = instance_index_.find(std::string(id));
  return it == instance_index_.end() ? nullptr : &instances_[it->second];
}

std::vector<const Concept*> Ontology::children(std::string_view id) const {
  std::vector<const Concept*> out;
  auto it = children_index_.find(std::string(id));
  if (it == children_index_.end()) return out;
  out.reserve(it->second.size());
  for (auto i : it->second) out.push_back(&concepts_[i]);
  return out;
}

bool operator==(const Ontology& a, const Ontology& b) {
  if (a.roots_ != b.roots_) return false;
  if (a.concepts_.size() != b.concepts_.size()) return false;
  if (a.instances_.size() != b.instances_.size()) return false;
  for (const auto& c : a.concepts_) {
    const Concept* other = b.find_concept(c.id);
    if (!other || !(*other == c)) return false;
  }
  for (const auto& i : a.instances_) {
    const Instance* other = b.find_instance(i.id);
    if (!other || !(*other == i)) return false;
  }
  return true;
}

std::string_view rule_name(Rule rule) noexcept {
  switch (rule) {
    case Rule::InvalidId: return "InvalidId";
    case Rule::DuplicateConceptId: return "DuplicateConceptId";
    case Rule::DuplicateInstanceId: return "DuplicateInstanceId";
    case Rule::EmptyLabel: return "EmptyLabel";
    case Rule::DanglingParent: return "DanglingParent";
    case Rule::ParentCycle: return "ParentCycle";
    case Rule::DuplicatePrimaryLabel: return "DuplicatePrimaryLabel";
    case Rule::WeightOutOfRange: return "WeightOutOfRange";
    case Rule::EmptyTerm: return "EmptyTerm";
    case Rule::InvalidLanguage: return "InvalidLanguage";
    case Rule::UnknownInstanceConcept: return "UnknownInstanceConcept";
    case Rule::InvalidCountry: return "InvalidCountry";
  }
  return "Unknown";
}

bool is_valid_id(std::string_view id) noexcept {
  if (id.empty()) return false;
  return std::none_of(id.begin(), id.end(), [](unsigned char ch) {
    return ch <= 0x20 || ch == 0x7f;
  });
}

namespace {

bool is_blank(std::string_view s) {
  return std::all_of(s.begin(), s.end(), [](unsigned char ch) {
    return ch == ' ' || ch == '\t' || ch == '\n' || ch == '\r' || ch == '\f' ||
           ch == '\v';
  });
}

bool is_language_code(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char ch) {
    return ch >= 'A' && ch <= 'Z';
  });
}

bool is_country_code(std::string_view s) {
  return s.size() == 2 && is_language_code(s);
}

void check_lexicon(const Concept& c, std::vector<Violation>& out) {
  std::set<std::string> labelled;
  for (const auto& e : c.lexicon) {
    if (!(e.weight >= 0.0 && e.weight <= 1.0)) {
      out.push_back({c.id, Rule::WeightOutOfRange,
                     "weight of '" + e.term + "' is outside [0,1]"});
    }
    if (is_blank(e.term)) {
      out.push_back({c.id, Rule::EmptyTerm, "lexical entry with empty term"});
    }
    if (!is_language_code(e.language)) {
      out.push_back({c.id, Rule::InvalidLanguage,
                     "language code '" + e.language + "' is not upper-case letters"});
    }
    if (e.kind == EntryKind::PrimaryLabel && !labelled.insert(e.language).second) {
      out.push_back({c.id, Rule::DuplicatePrimaryLabel,
                     "more than one primary label for language " + e.language});
    }
  }
}

}  // namespace

std::vector<Violation> validate(const Ontology& ontology) {
  std::vector<Violation> out;
  std::unordered_set<std::string> seen;
  const auto& concepts = ontology.concepts();

  for (const auto& c : concepts) {
    if (!is_valid_id(c.id)) {
      out.push_back({c.id, Rule::InvalidId, "concept id is empty or contains whitespace"});
    }
    if (!seen.insert(c.id).second) {
      out.push_back({c.id, Rule::DuplicateConceptId, "concept id declared more than once"});
    }
    if (is_blank(c.label)) {
      out.push_back({c.id, Rule::EmptyLabel, "concept label is empty"});
    }
    if (c.parent && !ontology.find_concept(*c.parent)) {
      out.push_back({c.id, Rule::DanglingParent,
                     "parent '" + *c.parent + "' does not exist"});
    }
    check_lexicon(c, out);
  }

  // Any concept whose parent chain does not terminate at a root within
  // |concepts| steps lies on (or hangs below) a cycle. Only report the
  // concepts actually on a cycle.
  std::unordered_set<std::string> on_cycle;
  for (const auto& c : concepts) {
    std::vector<const Concept*> path;
    std::unordered_map<std::string, std::size_t> pos;
    const Concept* cur = &c;
    while (cur && cur->parent) {
      if (on_cycle.count(cur->id)) break;
      auto [it, fresh] = pos.try_emplace(cur->id, path.size());
      if (!fresh) {
        for (std::size_t i = it->second; i < path.size(); ++i)
          on_cycle.insert(path[i]->id);
        break;
      }
      path.push_back(cur);
      cur = ontology.find_concept(*cur->parent);
    }
  }
  for (const auto& c : concepts) {
    if (on_cycle.count(c.id)) {
      out.push_back({c.id, Rule::ParentCycle, "parent chain forms a cycle"});
      on_cycle.erase(c.id);
    }
  }

  seen.clear();
  for (const auto& inst : ontology.instances()) {
    if (!is_valid_id(inst.id)) {
      out.push_back({inst.id, Rule::InvalidId, "instance id is empty or contains whitespace"});
    }
    if (!seen.insert(inst.id).second) {
      out.push_back({inst.id, Rule::DuplicateInstanceId,
                     "instance id declared more than once"});
    }
    if (!ontology.find_concept(inst.concept_id)) {
      out.push_back({inst.id, Rule::UnknownInstanceConcept,
                     "type '" + inst.concept_id + "' does not exist"});
    }
    if (const auto* country = inst.attribute(attr::kCountry);
        country && !is_country_code(*country)) {
      out.push_back({inst.id, Rule::InvalidCountry,
                     "country '" + *country + "' is not an ISO 3166-1 alpha-2 code"});
    }
  }
  return out;
}

std::size_t ConceptTree::size() const {
  std::size_t n = 1;
  for (const auto& c : children) n += c.size();
  return n;
}

namespace {

ConceptTree build_tree(const Ontology& ontology, const Concept& node,
                       std::unordered_set<std::string>& visiting) {
  ConceptTree tree{node, {}};
  visiting.insert(node.id);
  for (const Concept* child : ontology.children(node.id)) {
    if (visiting.count(child->id)) continue;
    tree.children.push_back(build_tree(ontology, *child, visiting));
  }
  visiting.erase(node.id);
  return tree;
}

}  // namespace

ConceptTree subtree(const Ontology& ontology, std::string_view root) {
  const Concept* c = ontology.find_concept(root);
  if (!c) fail(ErrorCode::UnknownId, "unknown concept id '" + std::string(root) + "'");
  std::unordered_set<std::string> visiting;
  return build_tree(ontology, *c, visiting);
}

std::vector<Instance> instances_of(const Ontology& ontology,
                                   std::string_view concept_id, bool transitive) {
  if (!ontology.find_concept(concept_id))
    fail(ErrorCode::UnknownId, "unknown concept id '" + std::string(concept_id) + "'");

  std::unordered_set<std::string> types{std::string(concept_id)};
  if (transitive) {
    std::vector<std::string> stack{std::string(concept_id)};
    while (!stack.empty()) {
      std::string id = std::move(stack.back());
      stack.pop_back();
      for (const Concept* child : ontology.children(id))
        if (types.insert(child->id).second) stack.push_back(child->id);
    }
  }

  std::vector<Instance> out;
  for (const auto& inst : ontology.instances())
    if (types.count(inst.concept_id)) out.push_back(inst);
  std::sort(out.begin(), out.end(),
            [](const Instance& a, const Instance& b) { return a.id < b.id; });
  return out;
}

}  // namespace ontowind
