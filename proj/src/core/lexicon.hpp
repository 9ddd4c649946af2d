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

#ifndef ONTOWIND_CORE_LEXICON_HPP
#define ONTOWIND_CORE_LEXICON_HPP

#include <cstdint>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "core/ontology.hpp"
#include "core/text.hpp"

namespace ontowind {

struct LexiconOptions {
  std::set<std::string> languages{"EN"};
  // Only primary labels participate (no synonyms).
  bool labels_only = false;
  NormalizeOptions normalize;
};

struct LexiconEntry {
  std::vector<std::string> tokens;  // normalized, never empty
  ConceptId concept_id;
  LexicalEntry source;
  // The concept's English primary-label weight, falling back to its primary
  // label in source.language, then to source.weight.
  double label_weight = 0.0;
};

struct ConceptMatch {
  ConceptId concept_id;
  std::size_t entry_index = 0;  // into Lexicon::entries()
  LexicalEntry entry;
  std::size_t start = 0;  // first token, inclusive
  std::size_t end = 0;    // last token, inclusive

  friend bool operator==(const ConceptMatch&, const ConceptMatch&) = default;
};

// Token-level trie over every entry. Immutable once built; find_matches is
// safe to call concurrently.
class Lexicon {
 public:
  Lexicon() = default;
  // Entries with an empty token sequence are dropped.
  Lexicon(std::vector<LexiconEntry> entries, NormalizeOptions normalize);

  const std::vector<LexiconEntry>& entries() const { return entries_; }
  const NormalizeOptions& normalize_options() const { return normalize_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  // Greedy leftmost-longest, non-overlapping. Entries sharing a token
  // sequence resolve to the lowest entry index.
  std::vector<ConceptMatch> find_matches(std::span<const std::string> tokens) const;
  std::vector<ConceptMatch> find_matches(std::string_view text) const;

 private:
  struct Node {
    std::unordered_map<std::string, std::uint32_t> next;
    std::int64_t entry = -1;
  };

  std::vector<LexiconEntry> entries_;
  NormalizeOptions normalize_;
  std::vector<Node> nodes_{Node{}};
};

Lexicon build_lexicon(const Ontology& ontology, const LexiconOptions& options = {});

inline std::vector<ConceptMatch> find_matches(const Lexicon& lexicon, std::string_view text) {
  return lexicon.find_matches(text);
}

}  // namespace ontowind

#endif  // ONTOWIND_CORE_LEXICON_HPP
