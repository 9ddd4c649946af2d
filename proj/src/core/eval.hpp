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

#ifndef ONTOWIND_CORE_EVAL_HPP
#define ONTOWIND_CORE_EVAL_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "core/categorizer.hpp"
#include "core/corpus.hpp"
#include "core/lexicon.hpp"

namespace ontowind {

struct ConfusionMatrix {
  std::size_t tp = 0;
  std::size_t fn = 0;
  std::size_t tn = 0;
  std::size_t fp = 0;

  std::size_t total() const { return tp + fn + tn + fp; }
  std::size_t positives() const { return tp + fn; }
  std::size_t negatives() const { return tn + fp; }

  void add(bool predicted, bool actual) {
    if (actual)
      ++(predicted ? tp : fn);
    else
      ++(predicted ? fp : tn);
  }

  friend bool operator==(const ConfusionMatrix&, const ConfusionMatrix&) = default;
};

// (tp + tn) / total. Throws Error(EmptyMatrix) when total == 0.
double accuracy(const ConfusionMatrix& cm);

// Undefined ratios (zero denominators) are empty.
std::optional<double> precision(const ConfusionMatrix& cm);
std::optional<double> recall(const ConfusionMatrix& cm);
std::optional<double> f1(const ConfusionMatrix& cm);

// Three-decimal and one-decimal-percent renderings, e.g. "0.934" / "93.4%".
std::string format_accuracy(double accuracy);
std::string format_percent(double accuracy);

// Throws Error(LabelMismatch) unless labels cover exactly the documents.
void check_labels(const LabeledCorpus& corpus);

ConfusionMatrix evaluate(const Lexicon& lexicon, const LabeledCorpus& corpus,
                         const CategorizeOptions& options = {});

struct Disagreement {
  std::string document_id;
  bool label = false;
  CategorizationResult a;
  CategorizationResult b;
};

struct ComparisonReport {
  ConfusionMatrix a;
  ConfusionMatrix b;
  double accuracy_a = 0.0;
  double accuracy_b = 0.0;
  std::vector<Disagreement> disagreements;  // corpus order
};

// Throws as evaluate, and Error(EmptyMatrix) for an empty corpus.
ComparisonReport compare(const Lexicon& a, const Lexicon& b, const LabeledCorpus& corpus,
                         const CategorizeOptions& options = {});

// A concept planted verbatim into a synthetic document.
struct PlantedConcept {
  ConceptId concept_id;
  std::size_t entry_index;
  double weight;
};

struct SyntheticDocument {
  Document document;
  std::vector<PlantedConcept> planted;
};

struct SyntheticCorpusOptions {
  std::size_t documents = 200;
  std::uint64_t seed = 1;
  std::size_t max_planted = 4;       // per document, 0..max_planted
  std::size_t filler_min = 20;       // filler words per document
  std::size_t filler_max = 60;
  double threshold = kDefaultThreshold;  // used only to derive the labels
};

// Documents made of filler words that match no lexicon entry, with a random
// number of entry terms planted between them. Only entries whose token
// sequence is unique in the lexicon are planted, and every planted term is
// surrounded by filler, so each planted term is exactly one match. Labels are
// the rule applied to the planted set (distinct concepts, max weight, sum).
struct SyntheticCorpus {
  LabeledCorpus corpus;
  std::vector<SyntheticDocument> documents;
};
SyntheticCorpus generate_synthetic_corpus(const Lexicon& lexicon,
                                          const SyntheticCorpusOptions& options = {});

}  // namespace ontowind

#endif  // ONTOWIND_CORE_EVAL_HPP
