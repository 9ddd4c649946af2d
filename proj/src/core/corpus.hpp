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

#ifndef ONTOWIND_CORE_CORPUS_HPP
#define ONTOWIND_CORE_CORPUS_HPP

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ontowind {

struct Document {
  std::string id;
  std::string title;
  std::string abstract_text;
  std::vector<std::string> keywords;
  std::optional<std::string> body;
  std::optional<std::string> source_url;

  friend bool operator==(const Document&, const Document&) = default;
};

// Title, abstract and keywords joined by single spaces. The body is not part
// of the categorized text.
std::string document_text(const Document& doc);

struct LabeledCorpus {
  std::vector<Document> documents;
  std::map<std::string, bool> labels;  // true = relevant
};

// Accepts a directory of UTF-8 text files (id = file stem, first line =
// title, remainder = abstract) or a JSON-lines file of
// {id, title, abstractText, keywords, ...}. Throws Error(Io) when unreadable.
// Plain-text mapping: the first non-blank line is the title, the rest the
// abstract.
Document document_from_text(std::string id, std::string_view text);

std::vector<Document> read_corpus(const std::filesystem::path& path);
std::vector<Document> parse_jsonl_documents(std::string_view bytes);

// JSON lines of {id, title, abstractText, keywords, label}.
LabeledCorpus read_labeled_corpus(const std::filesystem::path& path);
LabeledCorpus parse_labeled_jsonl(std::string_view bytes);

void write_labeled_jsonl(const std::filesystem::path& path, const LabeledCorpus& corpus);

}  // namespace ontowind

#endif  // ONTOWIND_CORE_CORPUS_HPP
