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

#include "core/corpus.hpp"
#include "core/error.hpp"
#include "core/io.hpp"
#include "support/support.hpp"

namespace ow = ontowind;
namespace owt = ontowind::testing;

namespace {

ow::ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const ow::Error& e) {
    return e.code();
  }
  return ow::ErrorCode::Internal;
}

}  // namespace

TEST_CASE("plain text: first non-blank line is the title") {
  auto d = ow::document_from_text("x", "\xEF\xBB\xBF\n  \r\nTitle line\r\nBody one\nBody two");
  CHECK(d.id == "x");
  CHECK(d.title == "Title line");
  CHECK(d.abstract_text == "Body one\nBody two");
  auto only = ow::document_from_text("y", "Lonely title");
  CHECK(only.title == "Lonely title");
  CHECK(only.abstract_text.empty());
  CHECK(ow::document_from_text("z", "").title.empty());
}

TEST_CASE("directory corpus is sorted and skips hidden files") {
  owt::TempDir dir;
  ow::write_file(dir / "b.txt", "Second\nbody");
  ow::write_file(dir / "a.txt", "First\n");
  ow::write_file(dir / ".hidden", "nope");
  std::filesystem::create_directory(dir / "sub");
  auto docs = ow::read_corpus(dir.path());
  REQUIRE(docs.size() == 2);
  CHECK(docs[0].id == "a");
  CHECK(docs[1].id == "b");
  CHECK(docs[1].abstract_text == "body");
  CHECK_FALSE(docs[0].source_url.has_value());

  auto fixtures = ow::read_corpus(owt::fixture("articles"));
  CHECK(fixtures.size() == 6);
  CHECK(fixtures[2].title == "Household electricity demand");
}

TEST_CASE("JSON-lines corpus") {
  auto docs = ow::read_corpus(owt::fixture("docs.jsonl"));
  REQUIRE(docs.size() == 3);
  CHECK(docs[0].id == "d1");
  CHECK(docs[0].keywords == std::vector<std::string>{"wake", "wind turbine"});
  CHECK(docs[0].source_url == "https://example.org/d1");
  CHECK_FALSE(docs[1].source_url.has_value());

  auto blank = ow::parse_jsonl_documents("\n  \n{\"id\":\"a\"}\n\n");
  CHECK(blank.size() == 1);
  CHECK(code_of([] { ow::parse_jsonl_documents("{\"id\":\"a\"}\n{oops"); }) ==
        ow::ErrorCode::Json);
  CHECK(code_of([] { ow::parse_jsonl_documents("[1]"); }) == ow::ErrorCode::Schema);
  CHECK(code_of([] { ow::parse_jsonl_documents("{\"title\":\"no id\"}"); }) ==
        ow::ErrorCode::Schema);
  CHECK(code_of([] { ow::parse_jsonl_documents("{\"id\":\"a\",\"keywords\":\"k\"}"); }) ==
        ow::ErrorCode::Schema);
  CHECK(code_of([] { ow::read_corpus("/nonexistent/corpus.jsonl"); }) == ow::ErrorCode::Io);
}

TEST_CASE("labeled corpus round trip and errors") {
  ow::LabeledCorpus c;
  ow::Document d;
  d.id = "p1";
  d.title = "Türkçe başlık";
  d.keywords = {"k"};
  d.source_url = "https://example.org/p1";
  c.documents.push_back(d);
  c.labels["p1"] = true;
  owt::TempDir dir;
  ow::write_labeled_jsonl(dir / "c.jsonl", c);
  auto back = ow::read_labeled_corpus(dir / "c.jsonl");
  CHECK(back.documents == c.documents);
  CHECK(back.labels == c.labels);

  CHECK(code_of([] { ow::parse_labeled_jsonl("{\"id\":\"a\"}"); }) == ow::ErrorCode::Schema);
  CHECK(code_of([] { ow::parse_labeled_jsonl("{\"id\":\"a\",\"label\":1}"); }) ==
        ow::ErrorCode::Schema);
  CHECK(code_of([] {
          ow::parse_labeled_jsonl("{\"id\":\"a\",\"label\":true}\n{\"id\":\"a\",\"label\":false}");
        }) == ow::ErrorCode::DuplicateId);
  CHECK(code_of([&] { ow::read_labeled_corpus(dir.path()); }) == ow::ErrorCode::Io);
}

TEST_CASE("document text joins title, abstract and keywords") {
  ow::Document d;
  d.title = "wind";
  d.abstract_text = "turbine";
  d.keywords = {"farm"};
  auto tokens = ow::normalize(ow::document_text(d));
  CHECK(tokens == std::vector<std::string>{"wind", "turbine", "farm"});
}
