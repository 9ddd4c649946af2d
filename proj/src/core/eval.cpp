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

#include "core/eval.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <map>
#include <random>
#include <unordered_set>

#include "core/error.hpp"

namespace ontowind {

double accuracy(const ConfusionMatrix& cm) {
  if (cm.total() == 0) fail(ErrorCode::EmptyMatrix, "accuracy of an empty confusion matrix");
  return static_cast<double>(cm.tp + cm.tn) / static_cast<double>(cm.total());
}

std::optional<double> precision(const ConfusionMatrix& cm) {
  if (cm.tp + cm.fp == 0) return std::nullopt;
  return static_cast<double>(cm.tp) / static_cast<double>(cm.tp + cm.fp);
}

std::optional<double> recall(const ConfusionMatrix& cm) {
  if (cm.tp + cm.fn == 0) return std::nullopt;
  return static_cast<double>(cm.tp) / static_cast<double>(cm.tp + cm.fn);
}

std::optional<double> f1(const ConfusionMatrix& cm) {
  auto p = precision(cm), r = recall(cm);
  if (!p || !r || *p + *r == 0.0) return std::nullopt;
  return 2.0 * *p * *r / (*p + *r);
}

std::string format_accuracy(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", value);
  return buf;
}

std::string format_percent(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1f%%", value * 100.0);
  return buf;
}

void check_labels(const LabeledCorpus& corpus) {
  std::unordered_set<std::string> ids;
  for (const auto& d : corpus.documents) {
    if (!ids.insert(d.id).second)
      fail(ErrorCode::DuplicateId, "duplicate document id '" + d.id + "'");
    if (!corpus.labels.count(d.id))
      fail(ErrorCode::LabelMismatch, "document '" + d.id + "' has no label");
  }
  for (const auto& [id, label] : corpus.labels)
    if (!ids.count(id)) fail(ErrorCode::LabelMismatch, "label for unknown document '" + id + "'");
}

ConfusionMatrix evaluate(const Lexicon& lexicon, const LabeledCorpus& corpus,
                         const CategorizeOptions& options) {
  check_labels(corpus);
  auto results = categorize_corpus(lexicon, corpus.documents, options);
  ConfusionMatrix cm;
  for (std::size_t i = 0; i < results.size(); ++i)
    cm.add(results[i].relevant, corpus.labels.at(corpus.documents[i].id));
  return cm;
}

ComparisonReport compare(const Lexicon& a, const Lexicon& b, const LabeledCorpus& corpus,
                         const CategorizeOptions& options) {
  check_labels(corpus);
  if (corpus.documents.empty()) fail(ErrorCode::EmptyMatrix, "cannot compare on an empty corpus");
  auto ra = categorize_corpus(a, corpus.documents, options);
  auto rb = categorize_corpus(b, corpus.documents, options);
  ComparisonReport report;
  for (std::size_t i = 0; i < ra.size(); ++i) {
    const auto& id = corpus.documents[i].id;
    bool label = corpus.labels.at(id);
    report.a.add(ra[i].relevant, label);
    report.b.add(rb[i].relevant, label);
    if (ra[i].relevant != rb[i].relevant)
      report.disagreements.push_back({id, label, std::move(ra[i]), std::move(rb[i])});
  }
  report.accuracy_a = accuracy(report.a);
  report.accuracy_b = accuracy(report.b);
  return report;
}

namespace {

const std::vector<std::string>& filler_pool() {
  static const std::vector<std::string> words{
      "analysis",   "approach",  "baseline",  "benchmark", "case",      "cost",
      "demand",     "design",    "economic",  "efficiency", "estimate", "evaluation",
      "framework",  "grid",      "household", "impact",    "investment", "market",
      "method",     "optimal",   "report",     "policy",    "proposed",  "results",
      "scenario",   "simulation", "storage",  "strategy",  "study",     "sustainable",
      "technology", "uncertainty", "usage",   "value",     "proposal",  "review"};
  return words;
}

}  // namespace

SyntheticCorpus generate_synthetic_corpus(const Lexicon& lexicon,
                                          const SyntheticCorpusOptions& options) {
  if (options.filler_min == 0 || options.filler_min > options.filler_max)
    fail(ErrorCode::InvalidArgument, "filler range must satisfy 1 <= min <= max");

  std::unordered_set<std::string> lexicon_tokens;
  std::map<std::vector<std::string>, std::size_t> sequence_count;
  for (const auto& e : lexicon.entries()) {
    for (const auto& t : e.tokens) lexicon_tokens.insert(t);
    ++sequence_count[e.tokens];
  }
  std::vector<std::string> filler;
  for (const auto& w : filler_pool())
    if (!lexicon_tokens.count(w)) filler.push_back(w);
  for (std::size_t i = 0; filler.size() < 8; ++i) {
    std::string w = "qz" + std::to_string(i) + "x";
    if (!lexicon_tokens.count(w)) filler.push_back(w);
  }
  std::vector<std::size_t> plantable;
  for (std::size_t i = 0; i < lexicon.entries().size(); ++i)
    if (sequence_count[lexicon.entries()[i].tokens] == 1) plantable.push_back(i);

  std::mt19937_64 rng(options.seed);
  auto pick = [&](std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
  };
  auto filler_word = [&] { return filler[pick(0, filler.size() - 1)]; };
  auto filler_run = [&](std::size_t n) {
    std::string s;
    for (std::size_t i = 0; i < n; ++i) s += (i ? " " : "") + filler_word();
    return s;
  };

  SyntheticCorpus out;
  for (std::size_t d = 0; d < options.documents; ++d) {
    SyntheticDocument sd;
    auto& doc = sd.document;
    char id[32];
    std::snprintf(id, sizeof id, "syn-%04zu", d);
    doc.id = id;
    doc.title = filler_run(pick(2, 5));
    doc.keywords = {filler_word(), filler_word()};

    std::size_t planted = plantable.empty() ? 0 : pick(0, options.max_planted);
    std::size_t words = pick(options.filler_min, options.filler_max);
    // Filler both sides of every planted term.
    std::vector<std::string> parts{filler_run(std::max<std::size_t>(1, words / (planted + 1)))};
    for (std::size_t p = 0; p < planted; ++p) {
      std::size_t entry = plantable[pick(0, plantable.size() - 1)];
      const auto& e = lexicon.entries()[entry];
      std::string term = e.source.term;
      if (pick(0, 2) == 0)
        std::transform(term.begin(), term.end(), term.begin(), [](unsigned char ch) {
          return ch < 0x80 ? static_cast<char>(std::toupper(ch)) : static_cast<char>(ch);
        });
      parts.push_back(term);
      parts.push_back(filler_run(std::max<std::size_t>(1, words / (planted + 1))));
      sd.planted.push_back({e.concept_id, entry, e.source.weight});
    }
    for (std::size_t i = 0; i < parts.size(); ++i) doc.abstract_text += (i ? " " : "") + parts[i];

    std::map<ConceptId, double> best;
    for (const auto& p : sd.planted) {
      auto [it, fresh] = best.try_emplace(p.concept_id, p.weight);
      if (!fresh) it->second = std::max(it->second, p.weight);
    }
    double sum = 0.0;
    for (const auto& [c, w] : best) sum += w;
    bool label = !best.empty() && sum + 1e-12 >= options.threshold;

    out.corpus.documents.push_back(doc);
    out.corpus.labels.emplace(doc.id, label);
    out.documents.push_back(std::move(sd));
  }
  return out;
}

}  // namespace ontowind
