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

#include <doctest.h>

#include <algorithm>

#include "core/categorizer.hpp"
#include "core/error.hpp"
#include "core/io.hpp"
#include "support/support.hpp"

namespace ow = ontowind;
namespace owt = ontowind::testing;

namespace {

const ow::Lexicon& seed_lexicon() {
  static const ow::Lexicon lex = ow::build_lexicon(ow::load_seed());
  return lex;
}

ow::Document doc(std::string id, std::string title, std::string abstract = {}) {
  ow::Document d;
  d.id = std::move(id);
  d.title = std::move(title);
  d.abstract_text = std::move(abstract);
  return d;
}

ow::ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const ow::Error& e) {
    return e.code();
  }
  return ow::ErrorCode::Internal;
}

// Single-token entries "t<i>" belonging to concept C<i % concepts>.
struct Synthetic {
  std::vector<ow::LexiconEntry> entries;
  std::vector<std::string> concept_of;
};

Synthetic synthetic_lexicon(owt::Rng& rng, std::size_t n_entries, std::size_t n_concepts) {
  Synthetic s;
  for (std::size_t i = 0; i < n_entries; ++i) {
    std::string concept_id = "C" + std::to_string(owt::uniform(rng, 0, n_concepts - 1));
    double w = owt::random_weight(rng);
    std::string term = "t" + std::to_string(i);
    s.entries.push_back({{term}, concept_id, {term, "EN", ow::EntryKind::Synonym, w}, w});
    s.concept_of.push_back(concept_id);
  }
  return s;
}

}  // namespace

TEST_CASE("reciprocal rank weight") {
  for (std::int64_t n = 1; n <= 10; ++n)
    CHECK(ow::reciprocal_rank_weight(n) == 1.0 / static_cast<double>(n));
  CHECK(ow::reciprocal_rank_weight(1) == 1.0);
  CHECK(code_of([] { ow::reciprocal_rank_weight(0); }) == ow::ErrorCode::InvalidArgument);
  CHECK(code_of([] { ow::reciprocal_rank_weight(-3); }) == ow::ErrorCode::InvalidArgument);
}

TEST_CASE("a single wind turbine mention is relevant") {
  auto r = ow::categorize(seed_lexicon(), doc("d", "Wind turbine wake effects"));
  CHECK(r.relevant);
  CHECK(r.score == 1.0);
  REQUIRE(r.matched_concepts.size() == 1);
  CHECK(r.matched_concepts[0].concept_id == "WindTurbine");
  CHECK(r.matched_concepts[0].match_count == 1);
}

TEST_CASE("empty document is irrelevant with score zero") {
  auto r = ow::categorize(seed_lexicon(), doc("e", ""));
  CHECK_FALSE(r.relevant);
  CHECK(r.score == 0.0);
  CHECK(r.matched_concepts.empty());
  CHECK(r.matches.empty());
}

TEST_CASE("sub-threshold matches stay irrelevant") {
  auto r = ow::categorize(seed_lexicon(), doc("d", "A WRF study"));
  CHECK(r.score == doctest::Approx(0.5));
  CHECK_FALSE(r.relevant);
}

TEST_CASE("temperature plus wind speed reaches 1.1") {
  auto r = ow::categorize(seed_lexicon(), doc("d", "Temperature and wind speed."));
  CHECK(r.score == doctest::Approx(1.1).epsilon(1e-12));
  CHECK(r.relevant);
  CHECK(r.matched_concepts.size() == 2);
}

TEST_CASE("repeated mentions count once at the maximum weight") {
  auto once = ow::categorize(seed_lexicon(), doc("d", "NWP"));
  auto many = ow::categorize(seed_lexicon(), doc("d", "NWP NWP model NWP"));
  CHECK(once.score == doctest::Approx(0.5));
  CHECK(many.score == doctest::Approx(0.6));
  CHECK(many.matched_concepts[0].match_count == 3);
}

TEST_CASE("threshold boundary is inclusive") {
  ow::Lexicon lex({{{"x"}, "X", {"x", "EN", ow::EntryKind::PrimaryLabel, 1.0}, 1.0}}, {});
  CHECK(ow::categorize(lex, doc("d", "x")).relevant);
  ow::Lexicon below(
      {{{"x"}, "X", {"x", "EN", ow::EntryKind::PrimaryLabel, 1.0 - 1e-9}, 1.0 - 1e-9}}, {});
  CHECK_FALSE(ow::categorize(below, doc("d", "x")).relevant);
  // Decimal weights summing to exactly 1 are relevant despite binary rounding.
  ow::Lexicon parts({{{"a"}, "A", {"a", "EN", ow::EntryKind::PrimaryLabel, 0.1}, 0.1},
                     {{"b"}, "B", {"b", "EN", ow::EntryKind::PrimaryLabel, 0.2}, 0.2},
                     {{"c"}, "C", {"c", "EN", ow::EntryKind::PrimaryLabel, 0.7}, 0.7}},
                    {});
  CHECK(ow::categorize(parts, doc("d", "a b c")).relevant);
}

TEST_CASE("threshold must be positive and finite") {
  for (double t : {0.0, -1.0, std::numeric_limits<double>::quiet_NaN(),
                   std::numeric_limits<double>::infinity()})
    CHECK(code_of([&] { ow::categorize(seed_lexicon(), doc("d", "x"), {.threshold = t}); }) ==
          ow::ErrorCode::InvalidArgument);
  auto r = ow::categorize(seed_lexicon(), doc("d", "WRF"), {.threshold = 0.5});
  CHECK(r.relevant);
  CHECK(r.threshold == 0.5);
}

TEST_CASE("strict label weights use the concept's primary label") {
  auto d = doc("d", "An anemometer mast");
  CHECK(ow::categorize(seed_lexicon(), d).score == doctest::Approx(0.8));
  CHECK(ow::categorize(seed_lexicon(), d, {.strict_label_weights = true}).score ==
        doctest::Approx(0.3));
}

TEST_CASE("keywords take part in matching") {
  auto d = doc("d", "Untitled");
  d.keywords = {"wind farm"};
  CHECK(ow::categorize(seed_lexicon(), d).relevant);
}

TEST_CASE("categorize_corpus rejects duplicate ids") {
  std::vector<ow::Document> docs{doc("a", "x"), doc("a", "y")};
  CHECK(code_of([&] { ow::categorize_corpus(seed_lexicon(), docs); }) ==
        ow::ErrorCode::DuplicateId);
}

TEST_CASE("parallel corpus categorization equals sequential") {
  owt::Rng rng(7);
  auto syn = synthetic_lexicon(rng, 40, 15);
  ow::Lexicon lex(syn.entries, {});
  std::vector<ow::Document> docs;
  std::vector<std::string> vocab;
  for (std::size_t i = 0; i < 60; ++i) vocab.push_back("t" + std::to_string(i));
  for (std::size_t i = 0; i < 1000; ++i)
    docs.push_back(doc("d" + std::to_string(i), owt::join(owt::random_tokens(rng, vocab, 0, 30))));
  auto all = ow::categorize_corpus(lex, docs);
  REQUIRE(all.size() == docs.size());
  for (std::size_t i = 0; i < docs.size(); ++i) CHECK(all[i] == ow::categorize(lex, docs[i]));
}

TEST_CASE("property: score equals the oracle over distinct concepts") {
  owt::Rng rng(99);
  for (int round = 0; round < 500; ++round) {
    auto syn = synthetic_lexicon(rng, owt::uniform(rng, 1, 30), owt::uniform(rng, 1, 10));
    ow::Lexicon lex(syn.entries, {});
    std::vector<std::string> tokens;
    std::vector<std::pair<std::string, double>> hits;
    for (std::size_t i = owt::uniform(rng, 0, 40); i > 0; --i) {
      if (owt::uniform(rng, 0, 2) == 0) {
        tokens.push_back("filler");
        continue;
      }
      std::size_t e = owt::uniform(rng, 0, syn.entries.size() - 1);
      tokens.push_back(syn.entries[e].tokens[0]);
      hits.emplace_back(syn.concept_of[e], syn.entries[e].source.weight);
    }
    double threshold = 0.05 + owt::random_weight(rng) * 2;
    auto r = ow::categorize(lex, doc("d", owt::join(tokens)), {.threshold = threshold});
    double expected = owt::oracle_score(hits);
    CHECK(r.score == doctest::Approx(expected).epsilon(1e-12));
    CHECK(r.relevant == (!hits.empty() && expected + 1e-12 >= threshold));
    std::set<std::string> distinct;
    for (const auto& [c, w] : hits) distinct.insert(c);
    CHECK(r.matched_concepts.size() == distinct.size());

    // Appending text never lowers the score; repeating it never changes it.
    auto more = ow::categorize(lex, doc("d", owt::join(tokens) + " " + syn.entries[0].tokens[0]));
    CHECK(more.score + 1e-12 >= r.score);
    auto twice = ow::categorize(lex, doc("d", owt::join(tokens) + " " + owt::join(tokens)),
                                {.threshold = threshold});
    CHECK(twice.score == doctest::Approx(r.score).epsilon(1e-12));
    CHECK(twice.relevant == r.relevant);

    // Raising one weight cannot turn a relevant document irrelevant.
    auto raised = syn.entries;
    std::size_t k = owt::uniform(rng, 0, raised.size() - 1);
    raised[k].source.weight = std::min(1.0, raised[k].source.weight + 0.25);
    auto r2 = ow::categorize(ow::Lexicon(raised, {}), doc("d", owt::join(tokens)),
                             {.threshold = threshold});
    CHECK(r2.score + 1e-12 >= r.score);
    if (r.relevant) CHECK(r2.relevant);
  }
}
