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
#include <functional>
#include <set>

#include "core/error.hpp"
#include "core/io.hpp"
#include "core/ontology.hpp"
#include "support/support.hpp"

namespace ow = ontowind;
using ow::Concept;
using ow::EntryKind;
using ow::Instance;
using ow::Ontology;
using ow::Rule;

namespace {

Concept make(std::string id, std::optional<std::string> parent = std::nullopt) {
  Concept c{id, std::move(parent), id, {}};
  c.lexicon.push_back({id + " term", "EN", EntryKind::PrimaryLabel, 1.0});
  return c;
}

std::set<Rule> rules_for(const std::vector<ow::Violation>& vs, const std::string& subject) {
  std::set<Rule> out;
  for (const auto& v : vs)
    if (v.subject == subject) out.insert(v.rule);
  return out;
}

}  // namespace

TEST_CASE("roots are the parentless concepts in declaration order") {
  Ontology o({make("B"), make("A"), make("C", "A"), make("D", "B")}, {});
  CHECK(o.roots() == std::vector<std::string>{"B", "A"});
  REQUIRE(o.children("A").size() == 1);
  CHECK(o.children("A")[0]->id == "C");
  CHECK(o.children("C").empty());
  CHECK(o.find_concept("D")->parent == "B");
  CHECK(o.find_concept("Z") == nullptr);
}

TEST_CASE("children are sorted by id") {
  Ontology o({make("R"), make("Zeta", "R"), make("Alpha", "R"), make("Mid", "R")}, {});
  std::vector<std::string> ids;
  for (const auto* c : o.children("R")) ids.push_back(c->id);
  CHECK(ids == std::vector<std::string>{"Alpha", "Mid", "Zeta"});
}

TEST_CASE("seed has four roots and validates cleanly") {
  auto seed = ow::load_seed();
  CHECK(ow::validate(seed).empty());
  CHECK(seed.roots() == std::vector<std::string>{"WindRelatedData", "WindRelatedModel",
                                                 "WindRelatedStructuralComponent",
                                                 "WindRelatedOrganization"});
  auto models = ow::subtree(seed, "WindRelatedModel");
  std::set<std::string> leaves;
  std::function<void(const ow::ConceptTree&)> walk = [&](const ow::ConceptTree& t) {
    if (t.children.empty()) leaves.insert(t.node.id);
    for (const auto& c : t.children) walk(c);
  };
  walk(models);
  CHECK(leaves == std::set<std::string>{"ALADIN", "ANFIS", "ANN", "IFS", "SVM", "WRF"});
}

TEST_CASE("validate reports each rule") {
  SUBCASE("duplicate concept id") {
    Ontology o({make("A"), make("A")}, {});
    CHECK(rules_for(ow::validate(o), "A").count(Rule::DuplicateConceptId));
  }
  SUBCASE("invalid id") {
    Ontology o({make("Wind Turbine")}, {});
    CHECK(rules_for(ow::validate(o), "Wind Turbine") == std::set<Rule>{Rule::InvalidId});
  }
  SUBCASE("empty label") {
    auto c = make("A");
    c.label = "  ";
    CHECK(rules_for(ow::validate(Ontology({c}, {})), "A") == std::set<Rule>{Rule::EmptyLabel});
  }
  SUBCASE("dangling parent") {
    Ontology o({make("A", "Nope")}, {});
    CHECK(rules_for(ow::validate(o), "A") == std::set<Rule>{Rule::DanglingParent});
  }
  SUBCASE("cycle flags only concepts on the cycle") {
    Ontology o({make("R"), make("A", "B"), make("B", "A"), make("C", "A")}, {});
    auto vs = ow::validate(o);
    CHECK(rules_for(vs, "A") == std::set<Rule>{Rule::ParentCycle});
    CHECK(rules_for(vs, "B") == std::set<Rule>{Rule::ParentCycle});
    CHECK(rules_for(vs, "C").empty());
    CHECK(rules_for(vs, "R").empty());
  }
  SUBCASE("self parent") {
    Ontology o({make("A", "A")}, {});
    CHECK(rules_for(ow::validate(o), "A") == std::set<Rule>{Rule::ParentCycle});
  }
  SUBCASE("two primary labels in one language") {
    auto c = make("A");
    c.lexicon.push_back({"other", "EN", EntryKind::PrimaryLabel, 0.5});
    CHECK(rules_for(ow::validate(Ontology({c}, {})), "A") ==
          std::set<Rule>{Rule::DuplicatePrimaryLabel});
  }
  SUBCASE("weights outside [0,1]") {
    for (double w : {-0.1, 1.0000001, std::nan("")}) {
      auto c = make("A");
      c.lexicon.push_back({"syn", "EN", EntryKind::Synonym, w});
      CHECK(rules_for(ow::validate(Ontology({c}, {})), "A") ==
            std::set<Rule>{Rule::WeightOutOfRange});
    }
  }
  SUBCASE("weights 0 and 1 are fine") {
    auto c = make("A");
    c.lexicon.push_back({"syn", "EN", EntryKind::Synonym, 0.0});
    c.lexicon.push_back({"syn2", "EN", EntryKind::Synonym, 1.0});
    CHECK(ow::validate(Ontology({c}, {})).empty());
  }
  SUBCASE("empty term and bad language") {
    auto c = make("A");
    c.lexicon.push_back({" ", "EN", EntryKind::Synonym, 0.5});
    c.lexicon.push_back({"x", "en", EntryKind::Synonym, 0.5});
    CHECK(rules_for(ow::validate(Ontology({c}, {})), "A") ==
          std::set<Rule>{Rule::EmptyTerm, Rule::InvalidLanguage});
  }
  SUBCASE("instances") {
    Instance good{"MGM", "A", {{"country", "TR"}}};
    Instance dup{"MGM", "A", {}};
    Instance orphan{"X", "Nope", {}};
    Instance bad_country{"Y", "A", {{"country", "Turkey"}}};
    Ontology o({make("A")}, {good, dup, orphan, bad_country});
    auto vs = ow::validate(o);
    CHECK(rules_for(vs, "MGM") == std::set<Rule>{Rule::DuplicateInstanceId});
    CHECK(rules_for(vs, "X") == std::set<Rule>{Rule::UnknownInstanceConcept});
    CHECK(rules_for(vs, "Y") == std::set<Rule>{Rule::InvalidCountry});
  }
}

TEST_CASE("subtree") {
  Ontology o({make("R"), make("A", "R"), make("B", "R"), make("A1", "A")}, {});
  auto t = ow::subtree(o, "R");
  CHECK(t.size() == 4);
  REQUIRE(t.children.size() == 2);
  CHECK(t.children[0].node.id == "A");
  CHECK(t.children[0].children[0].node.id == "A1");
  CHECK(ow::subtree(o, "A1").size() == 1);
  CHECK_THROWS_AS(ow::subtree(o, "Missing"), ow::Error);
  try {
    ow::subtree(o, "Missing");
  } catch (const ow::Error& e) {
    CHECK(e.code() == ow::ErrorCode::UnknownId);
  }
}

TEST_CASE("instances_of direct and transitive") {
  auto seed = ow::load_seed();
  auto direct = ow::instances_of(seed, "WindRelatedOrganization", false);
  CHECK(direct.empty());
  auto all = ow::instances_of(seed, "WindRelatedOrganization", true);
  std::vector<std::string> ids;
  for (const auto& i : all) ids.push_back(i.id);
  CHECK(ids == std::vector<std::string>{"CENER", "ECMWF", "MGM", "NCAR", "WMO"});
  const auto& mgm = *std::find_if(all.begin(), all.end(), [](auto& i) { return i.id == "MGM"; });
  CHECK(mgm.concept_id == "NationalWeatherService");
  CHECK(mgm.attribute("webAddress") != nullptr);
  CHECK(mgm.attribute("twitterAccount") != nullptr);
  CHECK(*mgm.attribute("country") == "TR");
  CHECK_THROWS_AS(ow::instances_of(seed, "Nope", true), ow::Error);
}

TEST_CASE("property: transitive instances equal the union over the subtree") {
  ow::testing::Rng rng(7);
  for (int round = 0; round < 200; ++round) {
    auto o = ow::testing::random_ontology(rng);
    REQUIRE(ow::validate(o).empty());
    for (const auto& c : o.concepts()) {
      auto tree = ow::subtree(o, c.id);
      std::set<std::string> in_tree;
      std::function<void(const ow::ConceptTree&)> walk = [&](const ow::ConceptTree& t) {
        in_tree.insert(t.node.id);
        for (const auto& k : t.children) walk(k);
      };
      walk(tree);
      std::vector<std::string> expected;
      for (const auto& i : o.instances())
        if (in_tree.count(i.concept_id)) expected.push_back(i.id);
      std::sort(expected.begin(), expected.end());
      std::vector<std::string> got;
      for (const auto& i : ow::instances_of(o, c.id, true)) got.push_back(i.id);
      CHECK(got == expected);
      for (const auto& i : ow::instances_of(o, c.id, false)) CHECK(i.concept_id == c.id);
    }
  }
}

TEST_CASE("semantic equality ignores declaration order of instances") {
  Instance a{"A1", "A", {}}, b{"B1", "A", {}};
  Ontology x({make("A")}, {a, b}), y({make("A")}, {b, a});
  CHECK(x == y);
  Ontology z({make("A")}, {a});
  CHECK_FALSE(x == z);
}

TEST_CASE("is_valid_id") {
  CHECK(ow::is_valid_id("WindTurbine"));
  CHECK(ow::is_valid_id("ALADIN"));
  CHECK_FALSE(ow::is_valid_id(""));
  CHECK_FALSE(ow::is_valid_id("Wind Turbine"));
  CHECK_FALSE(ow::is_valid_id("tab\there"));
}
