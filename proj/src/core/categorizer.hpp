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

#ifndef ONTOWIND_CORE_CATEGORIZER_HPP
#define ONTOWIND_CORE_CATEGORIZER_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "core/corpus.hpp"
#include "core/lexicon.hpp"

namespace ontowind {

inline constexpr double kDefaultThreshold = 1.0;

// Weight of a sense found at 1-based position `rank` in a ranked list: 1/rank.
// Throws Error(InvalidArgument) for rank < 1.
double reciprocal_rank_weight(std::int64_t rank);

struct CategorizeOptions {
  double threshold = kDefaultThreshold;
  // Every match of a concept contributes the concept's primary-label weight
  // rather than the weight of the entry that matched.
  bool strict_label_weights = false;
};

struct ConceptScore {
  ConceptId concept_id;
  double contributed_weight = 0.0;
  std::size_t match_count = 0;

  friend bool operator==(const ConceptScore&, const ConceptScore&) = default;
};

struct CategorizationResult {
  std::string document_id;
  std::vector<ConceptScore> matched_concepts;  // sorted by concept id
  double score = 0.0;
  double threshold = kDefaultThreshold;
  bool relevant = false;
  std::vector<ConceptMatch> matches;  // explanation, ordered by span start

  friend bool operator==(const CategorizationResult&, const CategorizationResult&) = default;
};

// A text is relevant when it mentions at least one concept and the sum over
// distinct mentioned concepts of their (max) weight reaches the threshold.
// Throws Error(InvalidArgument) unless threshold > 0.
CategorizationResult categorize(const Lexicon& lexicon, const Document& doc,
                                const CategorizeOptions& options = {});

// Element-wise categorize, order preserved. Throws Error(DuplicateId) when two
// documents share an id.
std::vector<CategorizationResult> categorize_corpus(const Lexicon& lexicon,
                                                    std::span<const Document> docs,
                                                    const CategorizeOptions& options = {});

}  // namespace ontowind

#endif  // ONTOWIND_CORE_CATEGORIZER_HPP
