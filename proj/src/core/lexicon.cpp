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

#include "core/lexicon.hpp"

#include <algorithm>

namespace ontowind {

Lexicon::Lexicon(std::vector<LexiconEntry> entries, NormalizeOptions normalize)
    : normalize_(normalize) {
  entries.erase(std::remove_if(entries.begin(), entries.end(),
                               [](const LexiconEntry& e) { return e.tokens.empty(); }),
                entries.end());
  entries_ = std::move(entries);
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    std::uint32_t node = 0;
    for (const auto& tok : entries_[i].tokens) {
      auto it = nodes_[node].next.find(tok);
      if (it == nodes_[node].next.end()) {
        auto fresh = static_cast<std::uint32_t>(nodes_.size());
        nodes_[node].next.emplace(tok, fresh);
        nodes_.emplace_back();
        node = fresh;
      } else {
        node = it->second;
      }
    }
    if (nodes_[node].entry < 0) nodes_[node].entry = static_cast<std::int64_t>(i);
  }
}

std::vector<ConceptMatch> Lexicon::find_matches(std::span<const std::string> tokens) const {
  std::vector<ConceptMatch> out;
  std::size_t pos = 0;
  while (pos < tokens.size()) {
    std::uint32_t node = 0;
    std::int64_t best = -1;
    std::size_t best_end = pos;
    for (std::size_t i = pos; i < tokens.size(); ++i) {
      auto it = nodes_[node].next.find(tokens[i]);
      if (it == nodes_[node].next.end()) break;
      node = it->second;
      if (nodes_[node].entry >= 0) {
        best = nodes_[node].entry;
        best_end = i;
      }
    }
    if (best < 0) {
      ++pos;
      continue;
    }
    const auto& e = entries_[static_cast<std::size_t>(best)];
    out.push_back({e.concept_id, static_cast<std::size_t>(best), e.source, pos, best_end});
    pos = best_end + 1;
  }
  return out;
}

std::vector<ConceptMatch> Lexicon::find_matches(std::string_view text) const {
  if (entries_.empty()) return {};
  auto tokens = normalize(text, normalize_);
  return find_matches(std::span<const std::string>(tokens));
}

Lexicon build_lexicon(const Ontology& ontology, const LexiconOptions& options) {
  std::vector<LexiconEntry> entries;
  for (const auto& c : ontology.concepts()) {
    const LexicalEntry* en_label = c.primary_label("EN");
    for (const auto& e : c.lexicon) {
      if (!options.languages.count(e.language)) continue;
      if (options.labels_only && e.kind != EntryKind::PrimaryLabel) continue;
      const LexicalEntry* own_label = c.primary_label(e.language);
      double label_weight = en_label ? en_label->weight : own_label ? own_label->weight : e.weight;
      entries.push_back({normalize(e.term, options.normalize), c.id, e, label_weight});
    }
  }
  return Lexicon(std::move(entries), options.normalize);
}

}  // namespace ontowind
