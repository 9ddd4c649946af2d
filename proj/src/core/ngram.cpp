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

#include "core/ngram.hpp"

#include <unicode/uchar.h>
#include <unicode/utf8.h>

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include "core/categorizer.hpp"
#include "core/error.hpp"
#include "core/text.hpp"

namespace ontowind {

const std::set<std::string>& default_stopwords() {
  static const std::set<std::string> words{
      "a",     "about", "after", "all",   "also",  "an",    "and",   "any",   "are",
      "as",    "at",    "be",    "been",  "but",   "by",    "can",   "for",   "from",
      "has",   "have",  "he",    "her",   "his",   "if",    "in",    "into",  "is",
      "it",    "its",   "more",  "no",    "not",   "of",    "on",    "or",    "our",
      "she",   "so",    "such",  "than",  "that",  "the",   "their", "them",  "there",
      "these", "they",  "this",  "to",    "was",   "we",    "were",  "which", "while",
      "who",   "will",  "with",  "would", "you"};
  return words;
}

std::set<std::string> parse_stopwords(std::string_view bytes) {
  std::set<std::string> out;
  std::size_t start = 0;
  while (start <= bytes.size()) {
    auto cut = bytes.find('\n', start);
    auto line = bytes.substr(start, cut == std::string_view::npos ? std::string_view::npos
                                                                   : cut - start);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    for (auto& tok : normalize(line)) out.insert(std::move(tok));
    if (cut == std::string_view::npos) break;
    start = cut + 1;
  }
  return out;
}

namespace {

// Unit separator never survives normalize(), so it is a safe join key.
constexpr char kJoin = '\x1f';

std::string join_key(const std::vector<std::string>& tokens, std::size_t begin, std::size_t n) {
  std::string key;
  for (std::size_t i = 0; i < n; ++i) {
    if (i) key += kJoin;
    key += tokens[begin + i];
  }
  return key;
}

std::vector<std::string> split_key(const std::string& key) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    auto cut = key.find(kJoin, start);
    out.push_back(key.substr(start, cut - start));
    if (cut == std::string::npos) break;
    start = cut + 1;
  }
  return out;
}

}  // namespace

std::vector<NgramStats> extract_ngrams(std::span<const Document> corpus,
                                       const NgramOptions& options) {
  if (options.n_min < 1 || options.n_min > options.n_max || options.n_max > kMaxNgramLength)
    fail(ErrorCode::InvalidArgument, "n-gram range must satisfy 1 <= nMin <= nMax <= 5");
  if (options.min_freq < 1) fail(ErrorCode::InvalidArgument, "minFreq must be >= 1");

  struct Counts {
    std::size_t freq = 0;
    std::size_t df = 0;
  };
  std::unordered_map<std::string, Counts> counts;
  const auto& stop = options.stopwords;

  for (const auto& doc : corpus) {
    auto tokens = normalize(document_text(doc));
    std::unordered_set<std::string> seen_here;
    for (std::size_t n = options.n_min; n <= options.n_max; ++n) {
      if (tokens.size() < n) break;
      for (std::size_t i = 0; i + n <= tokens.size(); ++i) {
        if (stop.count(tokens[i]) || stop.count(tokens[i + n - 1])) continue;
        auto key = join_key(tokens, i, n);
        auto& c = counts[key];
        ++c.freq;
        if (seen_here.insert(key).second) ++c.df;
      }
    }
  }

  std::vector<NgramStats> out;
  for (auto& [key, c] : counts)
    if (c.freq >= options.min_freq) out.push_back({split_key(key), c.freq, c.df});

  std::sort(out.begin(), out.end(), [](const NgramStats& a, const NgramStats& b) {
    if (a.frequency != b.frequency) return a.frequency > b.frequency;
    if (a.ngram.size() != b.ngram.size()) return a.ngram.size() > b.ngram.size();
    return a.ngram < b.ngram;
  });
  return out;
}

ConceptId camel_case_id(std::span<const std::string> tokens) {
  std::string id;
  for (const auto& tok : tokens) {
    if (tok.empty()) continue;
    const auto* bytes = reinterpret_cast<const uint8_t*>(tok.data());
    const auto len = static_cast<int32_t>(tok.size());
    int32_t i = 0;
    UChar32 c;
    U8_NEXT(bytes, i, len, c);
    if (c < 0) {
      id += tok;
      continue;
    }
    UChar32 upper = u_toupper(c);
    char buf[4];
    int32_t n = 0;
    U8_APPEND_UNSAFE(reinterpret_cast<uint8_t*>(buf), n, upper);
    id.append(buf, static_cast<std::size_t>(n));
    id.append(tok, static_cast<std::size_t>(i));
  }
  return id;
}

std::vector<ScaffoldEntry> scaffold(std::span<const NgramStats> ngrams, std::size_t top_k,
                                    WeightRule rule) {
  if (top_k < 1) fail(ErrorCode::InvalidArgument, "topK must be >= 1");
  if (rule.kind == WeightRule::Kind::Uniform &&
      !(rule.uniform_weight >= 0.0 && rule.uniform_weight <= 1.0))
    fail(ErrorCode::InvalidArgument, "uniform weight must lie in [0,1]");

  std::vector<ScaffoldEntry> out;
  std::unordered_set<std::string> ids;
  const std::size_t n = std::min(top_k, ngrams.size());
  for (std::size_t rank = 1; rank <= n; ++rank) {
    const auto& g = ngrams[rank - 1];
    ScaffoldEntry e;
    for (std::size_t i = 0; i < g.ngram.size(); ++i)
      e.candidate_term += (i ? " " : "") + g.ngram[i];
    e.suggested_concept_id = camel_case_id(g.ngram);
    if (!ids.insert(e.suggested_concept_id).second) continue;
    e.frequency = g.frequency;
    e.default_weight = rule.kind == WeightRule::Kind::ReciprocalRank
                           ? reciprocal_rank_weight(static_cast<std::int64_t>(rank))
                           : rule.uniform_weight;
    out.push_back(std::move(e));
  }
  return out;
}

Ontology scaffold_ontology(std::span<const ScaffoldEntry> entries, const std::string& language) {
  std::vector<Concept> concepts;
  for (const auto& e : entries) {
    Concept c;
    c.id = e.suggested_concept_id;
    c.label = e.suggested_concept_id;
    c.lexicon.push_back({e.candidate_term, language, EntryKind::PrimaryLabel, e.default_weight});
    concepts.push_back(std::move(c));
  }
  return Ontology(std::move(concepts), {});
}

}  // namespace ontowind
