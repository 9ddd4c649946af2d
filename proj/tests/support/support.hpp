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

// Shared test helpers: scratch directories, random generators and the
// brute-force oracles the optimized code is checked against.

#ifndef ONTOWIND_TESTS_SUPPORT_HPP
#define ONTOWIND_TESTS_SUPPORT_HPP

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "core/categorizer.hpp"
#include "core/corpus.hpp"
#include "core/lexicon.hpp"
#include "core/ngram.hpp"
#include "core/ontology.hpp"
#include "core/text.hpp"

namespace ontowind::testing {

class TempDir {
 public:
  TempDir() {
    static std::mt19937_64 rng(std::random_device{}());
    path_ = std::filesystem::temp_directory_path() /
            ("ontowind-test-" + std::to_string(rng()));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const std::filesystem::path& path() const { return path_; }
  std::filesystem::path operator/(const std::string& name) const { return path_ / name; }

 private:
  std::filesystem::path path_;
};

inline std::filesystem::path source_dir() { return ONTOWIND_SOURCE_DIR; }
inline std::filesystem::path fixture(const std::string& name) {
  return source_dir() / "tests" / "fixtures" / name;
}

using Rng = std::mt19937_64;

inline std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

// Weights with at most 6 fractional digits survive canonical JSON exactly.
inline double random_weight(Rng& rng) { return static_cast<double>(uniform(rng, 0, 1000000)) / 1e6; }

inline std::vector<std::string> random_tokens(Rng& rng, const std::vector<std::string>& vocab,
                                              std::size_t lo, std::size_t hi) {
  std::vector<std::string> out(uniform(rng, lo, hi));
  for (auto& t : out) t = vocab[uniform(rng, 0, vocab.size() - 1)];
  return out;
}

inline std::string join(const std::vector<std::string>& tokens, const std::string& sep = " ") {
  std::string out;
  for (std::size_t i = 0; i < tokens.size(); ++i) out += (i ? sep : "") + tokens[i];
  return out;
}

inline std::vector<std::string> small_vocab(std::size_t n) {
  std::vector<std::string> v;
  for (std::size_t i = 0; i < n; ++i) v.push_back(std::string(1, static_cast<char>('a' + i % 26)) + (i >= 26 ? std::to_string(i) : ""));
  return v;
}

// Random valid ontology: a forest of concepts with EN/TR lexicons and a few
// instances. Ids are unique CamelCase tokens.
inline Ontology random_ontology(Rng& rng, std::size_t max_concepts = 12) {
  static const std::vector<std::string> words{"wind",  "turbine", "blade", "rotor", "grid",
                                              "speed", "tower",   "ruzgar", "hız", "güç",
                                              "farm",  "offshore"};
  std::size_t n = uniform(rng, 1, max_concepts);
  std::vector<Concept> concepts;
  for (std::size_t i = 0; i < n; ++i) {
    Concept c;
    c.id = "C" + std::to_string(i) + "Node";
    if (i > 0 && uniform(rng, 0, 3) != 0) c.parent = "C" + std::to_string(uniform(rng, 0, i - 1)) + "Node";
    c.label = "Concept " + std::to_string(i);
    for (const char* lang : {"EN", "TR"}) {
      if (std::string(lang) == "TR" && uniform(rng, 0, 1)) continue;
      c.lexicon.push_back({words[uniform(rng, 0, words.size() - 1)] + " " + std::to_string(i) + lang,
                           lang, EntryKind::PrimaryLabel, random_weight(rng)});
      for (std::size_t s = uniform(rng, 0, 2); s > 0; --s)
        c.lexicon.push_back({words[uniform(rng, 0, words.size() - 1)] + " syn" + std::to_string(s),
                             lang, EntryKind::Synonym, random_weight(rng)});
    }
    concepts.push_back(std::move(c));
  }
  std::shuffle(concepts.begin(), concepts.end(), rng);
  std::vector<Instance> instances;
  for (std::size_t i = uniform(rng, 0, 3); i > 0; --i) {
    Instance inst;
    inst.id = "Org" + std::to_string(i);
    inst.concept_id = concepts[uniform(rng, 0, concepts.size() - 1)].id;
    inst.attributes["webAddress"] = "https://org" + std::to_string(i) + ".example";
    if (uniform(rng, 0, 1)) inst.attributes["twitterAccount"] = "https://twitter.com/org" + std::to_string(i);
    if (uniform(rng, 0, 1)) inst.attributes["country"] = "TR";
    if (uniform(rng, 0, 1)) inst.attributes["note"] = "a & b < c \"quoted\"";
    instances.push_back(std::move(inst));
  }
  return Ontology(std::move(concepts), std::move(instances));
}

// Leftmost-longest, lowest entry index on ties, straight from the definition.
inline std::vector<std::pair<std::size_t, std::size_t>> oracle_matches(
    const std::vector<std::vector<std::string>>& entries, const std::vector<std::string>& text) {
  std::vector<std::pair<std::size_t, std::size_t>> out;  // (entry, start)
  std::size_t i = 0;
  while (i < text.size()) {
    std::size_t best = SIZE_MAX, best_len = 0;
    for (std::size_t e = 0; e < entries.size(); ++e) {
      const auto& toks = entries[e];
      if (toks.empty() || toks.size() <= best_len || i + toks.size() > text.size()) continue;
      if (std::equal(toks.begin(), toks.end(), text.begin() + static_cast<std::ptrdiff_t>(i))) {
        best = e;
        best_len = toks.size();
      }
    }
    if (best == SIZE_MAX) {
      ++i;
    } else {
      out.emplace_back(best, i);
      i += best_len;
    }
  }
  return out;
}

// Distinct concepts, max weight each, summed.
inline double oracle_score(const std::vector<std::pair<std::string, double>>& matched) {
  std::map<std::string, double> best;
  for (const auto& [c, w] : matched) {
    auto [it, fresh] = best.try_emplace(c, w);
    if (!fresh) it->second = std::max(it->second, w);
  }
  double sum = 0.0;
  for (const auto& [c, w] : best) sum += w;
  return sum;
}

// Sliding-window n-gram counter without hashing or early exits.
inline std::vector<NgramStats> oracle_ngrams(const std::vector<Document>& docs,
                                             const NgramOptions& options) {
  std::map<std::vector<std::string>, std::pair<std::size_t, std::set<std::size_t>>> counts;
  for (std::size_t d = 0; d < docs.size(); ++d) {
    auto tokens = normalize(document_text(docs[d]));
    for (std::size_t n = options.n_min; n <= options.n_max; ++n)
      for (std::size_t i = 0; i + n <= tokens.size(); ++i) {
        std::vector<std::string> gram(tokens.begin() + static_cast<std::ptrdiff_t>(i),
                                      tokens.begin() + static_cast<std::ptrdiff_t>(i + n));
        if (options.stopwords.count(gram.front()) || options.stopwords.count(gram.back())) continue;
        auto& c = counts[gram];
        ++c.first;
        c.second.insert(d);
      }
  }
  std::vector<NgramStats> out;
  for (const auto& [gram, c] : counts)
    if (c.first >= options.min_freq) out.push_back({gram, c.first, c.second.size()});
  // Selection sort by the documented total order.
  for (std::size_t i = 0; i < out.size(); ++i) {
    std::size_t best = i;
    for (std::size_t j = i + 1; j < out.size(); ++j) {
      const auto& a = out[j];
      const auto& b = out[best];
      bool before = a.frequency != b.frequency     ? a.frequency > b.frequency
                    : a.ngram.size() != b.ngram.size() ? a.ngram.size() > b.ngram.size()
                                                       : a.ngram < b.ngram;
      if (before) best = j;
    }
    std::swap(out[i], out[best]);
  }
  return out;
}

}  // namespace ontowind::testing

#endif  // ONTOWIND_TESTS_SUPPORT_HPP
