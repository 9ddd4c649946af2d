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

#include <cmath>
#include <string>

#include "core/error.hpp"
#include "core/io.hpp"
#include "core/json_codec.hpp"
#include "core/ontology.hpp"
#include "support/support.hpp"

namespace ow = ontowind;
namespace owt = ontowind::testing;
using ow::EntryKind;

namespace {

ow::ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const ow::Error& e) {
    return e.code();
  }
  FAIL("expected an ontowind::Error");
  return ow::ErrorCode::Internal;
}

std::string minimal_owl(const std::string& body) {
  return R"(<?xml version="1.0"?>
<rdf:RDF xmlns="http://example.org/t#"
     xmlns:owl="http://www.w3.org/2002/07/owl#"
     xmlns:rdf="http://www.w3.org/1999/02/22-rdf-syntax-ns#"
     xmlns:rdfs="http://www.w3.org/2000/01/rdf-schema#">
)" + body + "\n</rdf:RDF>\n";
}

}  // namespace

TEST_CASE("format_weight") {
  CHECK(ow::format_weight(1.0) == "1.0");
  CHECK(ow::format_weight(0.0) == "0.0");
  CHECK(ow::format_weight(-0.0) == "0.0");
  CHECK(ow::format_weight(0.5) == "0.5");
  CHECK(ow::format_weight(0.25) == "0.25");
  CHECK(ow::format_weight(1.0 / 3.0) == "0.333333");
  CHECK(ow::format_weight(0.9) == "0.9");
  CHECK(ow::format_weight(0.1 + 0.2) == "0.3");
  CHECK(ow::format_weight(0.0000004) == "0.0");
}

TEST_CASE("seed golden file is byte-identical after parse and serialize") {
  auto golden = ow::read_file(owt::source_dir() / "data" / "seed.json");
  CHECK(ow::seed_canonical_bytes() == golden);
  CHECK(ow::serialize_canonical(ow::parse_canonical(golden)) == golden);
}

TEST_CASE("seed OWL file matches the canonical seed") {
  auto owl = ow::read_file(owt::source_dir() / "data" / "seed.owl");
  CHECK(ow::parse_owl(owl) == ow::load_seed());
  CHECK(ow::serialize_owl(ow::load_seed()) == owl);
}

TEST_CASE("canonical JSON schema errors") {
  using ow::ErrorCode;
  auto parse = [](std::string s) { return [s] { ow::parse_canonical(s); }; };
  CHECK(code_of(parse("{")) == ErrorCode::Json);
  CHECK(code_of(parse("[]")) == ErrorCode::Schema);
  CHECK(code_of(parse(R"({"concepts": []})")) == ErrorCode::Schema);
  CHECK(code_of(parse(R"({"formatVersion": "2", "concepts": []})")) == ErrorCode::Schema);
  CHECK(code_of(parse(R"({"formatVersion": "1", "concepts": [{"label": "x"}]})")) ==
        ErrorCode::Schema);
  CHECK(code_of(parse(R"({"formatVersion": "1", "concepts": [{"id": "A", "label": "a",
      "lexicon": [{"term": "t", "language": "EN", "kind": "Label", "weight": 1}]}]})")) ==
        ErrorCode::Schema);
  CHECK(code_of(parse(R"({"formatVersion": "1", "concepts": [{"id": "A", "label": "a",
      "lexicon": [{"term": "t", "language": "EN", "kind": "Synonym"}]}]})")) ==
        ErrorCode::Schema);
  CHECK(code_of(parse(R"({"formatVersion": "1", "concepts": [{"id": "A", "label": "a",
      "parent": 3}]})")) == ErrorCode::Schema);
}

TEST_CASE("canonical JSON validation is optional") {
  auto bytes = ow::read_file(owt::fixture("invalid.json"));
  CHECK(code_of([&] { ow::parse_canonical(bytes); }) == ow::ErrorCode::Validation);
  auto o = ow::parse_canonical(bytes, {.validate = false});
  CHECK(o.concepts().size() == 3);
  CHECK(ow::validate(o).size() == 5);
  CHECK(code_of([&] { ow::serialize_canonical(o); }) == ow::ErrorCode::Validation);
}

TEST_CASE("canonical output order is independent of input order") {
  ow::Concept r{"Root", std::nullopt, "root", {{"root", "EN", EntryKind::PrimaryLabel, 1.0}}};
  ow::Concept b{"B", "Root", "b", {{"bee", "EN", EntryKind::Synonym, 0.5},
                                  {"b", "TR", EntryKind::PrimaryLabel, 0.5},
                                  {"b", "EN", EntryKind::PrimaryLabel, 0.5}}};
  ow::Concept a{"A", "Root", "a", {}};
  ow::Ontology x({r, b, a}, {}), y({r, a, b}, {});
  CHECK(ow::serialize_canonical(x) == ow::serialize_canonical(y));
  auto j = nlohmann::json::parse(ow::serialize_canonical(x));
  CHECK(j["concepts"][1]["id"] == "A");
  auto lex = j["concepts"][2]["lexicon"];
  CHECK(lex[0]["language"] == "EN");
  CHECK(lex[0]["kind"] == "PrimaryLabel");
  CHECK(lex[1]["language"] == "TR");
  CHECK(lex[2]["kind"] == "Synonym");
}

TEST_CASE("property: canonical round trip on generated ontologies") {
  owt::Rng rng(11);
  for (int i = 0; i < 300; ++i) {
    auto o = owt::random_ontology(rng);
    auto bytes = ow::serialize_canonical(o);
    auto back = ow::parse_canonical(bytes);
    CHECK(back == o);
    CHECK(ow::serialize_canonical(back) == bytes);
  }
}

TEST_CASE("property: OWL to canonical to OWL preserves the ontology") {
  owt::Rng rng(12);
  for (int i = 0; i < 300; ++i) {
    auto o = owt::random_ontology(rng);
    auto owl = ow::serialize_owl(o);
    auto from_owl = ow::parse_owl(owl);
    CHECK(from_owl == o);
    auto canonical = ow::parse_canonical(ow::serialize_canonical(from_owl));
    auto owl_again = ow::serialize_owl(canonical);
    CHECK(ow::parse_owl(owl_again) == o);
    CHECK(owl_again == owl);
  }
}

TEST_CASE("OWL fixture with DOCTYPE entities, descriptions and typed nodes") {
  auto o = ow::load_ontology_file(owt::fixture("mini.owl").string());
  CHECK(o.roots() == std::vector<std::string>{"WindRelatedStructuralComponent",
                                              "WindRelatedOrganization"});
  const auto* turbine = o.find_concept("WindTurbine");
  REQUIRE(turbine != nullptr);
  CHECK(turbine->parent == "WindRelatedStructuralComponent");
  CHECK(turbine->label == "Wind turbine");
  REQUIRE(turbine->lexicon.size() == 4);
  CHECK(turbine->lexicon[0] == ow::LexicalEntry{"wind turbine", "EN", EntryKind::PrimaryLabel, 1.0});
  CHECK(turbine->lexicon[1] == ow::LexicalEntry{"rüzgar türbini", "TR", EntryKind::PrimaryLabel, 1.0});
  CHECK(turbine->lexicon[2] ==
        ow::LexicalEntry{"wind turbine generator", "EN", EntryKind::Synonym, 1.0});
  CHECK(turbine->lexicon[3] ==
        ow::LexicalEntry{"wind energy converter", "EN", EntryKind::Synonym, 0.9});
  const auto* sensor = o.find_concept("Sensor");
  REQUIRE(sensor != nullptr);
  CHECK(sensor->primary_label("EN")->weight == doctest::Approx(0.3));
  CHECK(o.find_concept("WindRelatedOrganization")->label == "WindRelatedOrganization");
  const auto* ewea = o.find_instance("EWEA");
  REQUIRE(ewea != nullptr);
  CHECK(ewea->concept_id == "WindRelatedOrganization");
  CHECK(*ewea->attribute("webAddress") == "https://windeurope.org");
  const auto* mgm = o.find_instance("MGM");
  REQUIRE(mgm != nullptr);
  CHECK(*mgm->attribute("twitterAccount") == "https://twitter.com/meteoroloji");
  CHECK(*mgm->attribute("country") == "TR");
}

TEST_CASE("unsupported OWL constructs fail loudly") {
  auto load = [](const char* name) {
    return [name] { ow::load_ontology_file(owt::fixture(name).string()); };
  };
  CHECK(code_of(load("restriction.owl")) == ow::ErrorCode::UnsupportedConstruct);
  CHECK(code_of(load("imports.owl")) == ow::ErrorCode::UnsupportedConstruct);
  CHECK(code_of([] {
          ow::parse_owl(minimal_owl(R"(<owl:Class rdf:about="#A"><owl:equivalentClass rdf:resource="#B"/></owl:Class>)"));
        }) == ow::ErrorCode::UnsupportedConstruct);
  CHECK(code_of([] { ow::parse_owl(minimal_owl(R"(<rdfs:Datatype rdf:about="#D"/>)")); }) ==
        ow::ErrorCode::UnsupportedConstruct);
  try {
    ow::load_ontology_file(owt::fixture("restriction.owl").string());
  } catch (const ow::Error& e) {
    CHECK(std::string(e.what()).find("owl:Restriction") != std::string::npos);
  }
}

TEST_CASE("OWL pairing errors") {
  CHECK(code_of([] { ow::load_ontology_file(owt::fixture("synonym_mismatch.owl").string()); }) ==
        ow::ErrorCode::Validation);
  CHECK(code_of([] {
          ow::parse_owl(minimal_owl(R"(<owl:Class rdf:about="#A"><labelEN>a</labelEN></owl:Class>)"));
        }) == ow::ErrorCode::Validation);
  CHECK(code_of([] {
          ow::parse_owl(minimal_owl(
              R"(<owl:Class rdf:about="#A"><labelEN>a</labelEN><membershipValueLabel>high</membershipValueLabel></owl:Class>)"));
        }) == ow::ErrorCode::Validation);
  CHECK(code_of([] {
          ow::parse_owl(minimal_owl(
              R"(<owl:Class rdf:about="#A"><labelEN>a</labelEN><membershipValueLabel>1.5</membershipValueLabel></owl:Class>)"));
        }) == ow::ErrorCode::Validation);
  CHECK(code_of([] {
          ow::parse_owl(minimal_owl(
              R"(<owl:Class rdf:about="#A"><labelEN>a</labelEN><membershipValueLabel>1</membershipValueLabel><synonymSet>x;;y</synonymSet><membershipValueSynonymSet>1;1</membershipValueSynonymSet></owl:Class>)"));
        }) == ow::ErrorCode::Validation);
}

TEST_CASE("malformed XML") {
  CHECK(code_of([] { ow::parse_owl("<rdf:RDF"); }) == ow::ErrorCode::Xml);
  CHECK(code_of([] { ow::parse_owl(""); }) == ow::ErrorCode::Xml);
}

TEST_CASE("external entities are never loaded") {
  auto doc = std::string(R"(<?xml version="1.0"?>
<!DOCTYPE rdf:RDF [ <!ENTITY leak SYSTEM "file:///etc/hostname"> ]>
<rdf:RDF xmlns="http://example.org/t#"
     xmlns:owl="http://www.w3.org/2002/07/owl#"
     xmlns:rdf="http://www.w3.org/1999/02/22-rdf-syntax-ns#">
  <owl:Class rdf:about="#A"><label>x&leak;</label><labelEN>a</labelEN><membershipValueLabel>1</membershipValueLabel></owl:Class>
</rdf:RDF>)");
  auto hostname = ow::read_file("/etc/hostname");
  try {
    auto o = ow::parse_owl(doc);
    CHECK(o.find_concept("A")->label == "x");
    if (!hostname.empty()) CHECK(o.find_concept("A")->label.find(hostname) == std::string::npos);
  } catch (const ow::Error& e) {
    CHECK(e.code() == ow::ErrorCode::Xml);
  }
}

TEST_CASE("XML special characters survive OWL round trip") {
  ow::Concept c{"A", std::nullopt, "R&D <lab> \"x\"",
                {{"wind & power", "EN", EntryKind::PrimaryLabel, 1.0},
                 {"a<b", "EN", EntryKind::Synonym, 0.5}}};
  ow::Instance i{"I", "A", {{"webAddress", "https://x.example/?a=1&b=2"}}};
  ow::Ontology o({c}, {i});
  CHECK(ow::parse_owl(ow::serialize_owl(o)) == o);
}

TEST_CASE("OWL writer rejects synonyms containing the list separator") {
  ow::Concept c{"A", std::nullopt, "a",
                {{"a", "EN", EntryKind::PrimaryLabel, 1.0}, {"x;y", "EN", EntryKind::Synonym, 0.5}}};
  CHECK(code_of([&] { ow::serialize_owl(ow::Ontology({c}, {})); }) == ow::ErrorCode::Validation);
}

TEST_CASE("format detection and file loading") {
  CHECK(ow::detect_format("  <?xml version='1.0'?><rdf:RDF/>") == ow::Format::Owl);
  CHECK(ow::detect_format("\xEF\xBB\xBF{\"formatVersion\": \"1\"}") == ow::Format::Canonical);
  CHECK(ow::format_for_path("x.owl") == ow::Format::Owl);
  CHECK(ow::format_for_path("x.OWL") == ow::Format::Owl);
  CHECK(ow::format_for_path("x.rdf") == ow::Format::Owl);
  CHECK(ow::format_for_path("x.json") == ow::Format::Canonical);
  CHECK(code_of([] { ow::load_ontology_file("/nonexistent/x.json"); }) == ow::ErrorCode::Io);
  CHECK(code_of([] { ow::load_ontology_file(owt::source_dir().string()); }) == ow::ErrorCode::Io);
  CHECK(ow::load_ontology_file("@seed") == ow::load_seed());
}

TEST_CASE("@default honours the environment") {
  ::unsetenv(ow::kOntologyEnvVar);
  CHECK(ow::resolve_ontology_path("@default") == "@seed");
  ::setenv(ow::kOntologyEnvVar, "/tmp/custom.json", 1);
  CHECK(ow::resolve_ontology_path("@default") == "/tmp/custom.json");
  CHECK(ow::resolve_ontology_path("other.json") == "other.json");
  ::unsetenv(ow::kOntologyEnvVar);
}
