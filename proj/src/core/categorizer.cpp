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

#include "core/categorizer.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <map>
#include <thread>
#include <unordered_set>

#include "core/error.hpp"

namespace ontowind {

namespace {

// Absorbs binary rounding when summing decimal weights (0.1 + 0.2 + 0.7).
// Far below any meaningful weight difference.
constexpr double kScoreSlack = 1e-12;

constexpr std::size_t kParallelCutoff = 256;

}  // namespace

double reciprocal_rank_weight(std::int64_t rank) {
  if (rank < 1) fail(ErrorCode::InvalidArgument, "rank must be >= 1, got " + std::to_string(rank));
  return 1.0 / static_cast<double>(rank);
}

CategorizationResult categorize(const Lexicon& lexicon, const Document& doc,
                                const CategorizeOptions& options) {
  if (!(options.threshold > 0.0) || !std::isfinite(options.threshold))
    fail(ErrorCode::InvalidArgument, "threshold must be a positive number");

  CategorizationResult result;
  result.document_id = doc.id;
  result.threshold = options.threshold;
  result.matches = lexicon.find_matches(document_text(doc));

  std::map<ConceptId, ConceptScore> by_concept;
  for (const auto& m : result.matches) {
    const auto& entry = lexicon.entries()[m.entry_index];
    double w = options.strict_label_weights ? entry.label_weight : m.entry.weight;
    auto& s = by_concept[m.concept_id];
    if (s.match_count == 0) {
      s.concept_id = m.concept_id;
      s.contributed_weight = w;
    } else {
      s.contributed_weight = std::max(s.contributed_weight, w);
    }
    ++s.match_count;
  }
  for (auto& [id, s] : by_concept) {
    result.score += s.contributed_weight;
    result.matched_concepts.push_back(std::move(s));
  }
  result.relevant = !result.matched_concepts.empty() &&
                    result.score + kScoreSlack >= options.threshold;
  return result;
}

std::vector<CategorizationResult> categorize_corpus(const Lexicon& lexicon,
                                                    std::span<const Document> docs,
                                                    const CategorizeOptions& options) {
  std::unordered_set<std::string> ids;
  for (const auto& d : docs)
    if (!ids.insert(d.id).second)
      fail(ErrorCode::DuplicateId, "duplicate document id '" + d.id + "'");

  std::vector<CategorizationResult> out(docs.size());
  auto run = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) out[i] = categorize(lexicon, docs[i], options);
  };

  unsigned workers = std::max(1u, std::thread::hardware_concurrency());
  if (docs.size() < kParallelCutoff || workers == 1) {
    run(0, docs.size());
    return out;
  }
  workers = std::min<unsigned>(workers, 8);
  std::vector<std::thread> threads;
  std::vector<std::exception_ptr> errors(workers);
  std::size_t chunk = (docs.size() + workers - 1) / workers;
  for (unsigned w = 0; w < workers; ++w) {
    std::size_t begin = w * chunk, end = std::min(docs.size(), begin + chunk);
    if (begin >= end) break;
    threads.emplace_back([&, w, begin, end] {
      try {
        run(begin, end);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

}  // namespace ontowind
