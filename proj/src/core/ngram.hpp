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

#ifndef ONTOWIND_CORE_NGRAM_HPP
#define ONTOWIND_CORE_NGRAM_HPP

#include <cstddef>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "core/corpus.hpp"
#include "core/ontology.hpp"

namespace ontowind {

struct NgramStats {
  std::vector<std::string> ngram;
  std::size_t frequency = 0;
  std::size_t document_frequency = 0;

  friend bool operator==(const NgramStats&, const NgramStats&) = default;
};

struct NgramOptions {
  std::size_t n_min = 1;
  std::size_t n_max = 3;
  std::size_t min_freq = 5;
  std::set<std::string> stopwords;  // compared against normalized tokens
};

inline constexpr std::size_t kMaxNgramLength = 5;

// Small English list used when no stopword file is given.
const std::set<std::string>& default_stopwords();

// Parses a stopword file: one word per line, '#' starts a comment. Words are
// normalized like corpus text.
std::set<std::string> parse_stopwords(std::string_view bytes);

// Counts token n-grams of every document's categorized text, drops those with
// a stopword at either edge and those under min_freq, and ranks by frequency
// desc, length desc, then token-wise lexicographic order. Throws
// Error(InvalidArgument) unless 1 <= n_min <= n_max <= 5 and min_freq >= 1.
std::vector<NgramStats> extract_ngrams(std::span<const Document> corpus,
                                       const NgramOptions& options);

struct ScaffoldEntry {
  std::string candidate_term;
  ConceptId suggested_concept_id;
  std::size_t frequency = 0;
  double default_weight = 0.0;

  friend bool operator==(const ScaffoldEntry&, const ScaffoldEntry&) = default;
};

struct WeightRule {
  enum class Kind { Uniform, ReciprocalRank };
  Kind kind = Kind::ReciprocalRank;
  double uniform_weight = 1.0;

  static WeightRule uniform(double w) { return {Kind::Uniform, w}; }
  static WeightRule reciprocal_rank() { return {Kind::ReciprocalRank, 1.0}; }
};

// "wind turbine" -> "WindTurbine".
ConceptId camel_case_id(std::span<const std::string> tokens);

// Top-K n-grams as draft concepts. Suggested ids that collide with an
// earlier candidate are skipped, so the output may hold fewer than top_k.
std::vector<ScaffoldEntry> scaffold(std::span<const NgramStats> ngrams, std::size_t top_k,
                                    WeightRule rule);

// The scaffold as an ontology of parentless concepts, each carrying its
// candidate term as primary label in `language`.
Ontology scaffold_ontology(std::span<const ScaffoldEntry> entries,
                           const std::string& language = "EN");

}  // namespace ontowind

#endif  // ONTOWIND_CORE_NGRAM_HPP
