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

#include "core/corpus.hpp"

#include <algorithm>
#include <functional>

#include "core/error.hpp"
#include "core/io.hpp"
#include "core/json_codec.hpp"

namespace ontowind {

namespace fs = std::filesystem;
using nlohmann::json;

std::string document_text(const Document& doc) {
  std::string text = doc.title;
  text += ' ';
  text += doc.abstract_text;
  for (const auto& k : doc.keywords) {
    text += ' ';
    text += k;
  }
  return text;
}

namespace {

void for_each_json_line(std::string_view bytes,
                        const std::function<void(const json&, std::size_t)>& fn) {
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start < bytes.size()) {
    auto cut = bytes.find('\n', start);
    auto line = bytes.substr(start, cut == std::string_view::npos ? std::string_view::npos
                                                                   : cut - start);
    ++line_no;
    start = cut == std::string_view::npos ? bytes.size() : cut + 1;
    if (line.find_first_not_of(" \t\r") == std::string_view::npos) continue;
    json j;
    try {
      j = json::parse(line.begin(), line.end());
    } catch (const json::parse_error& e) {
      fail(ErrorCode::Json, "line " + std::to_string(line_no) + ": " + e.what());
    }
    if (!j.is_object())
      fail(ErrorCode::Schema, "line " + std::to_string(line_no) + ": expected a JSON object");
    fn(j, line_no);
  }
}

Document document_from_line(const json& j, std::size_t line_no) {
  Document d;
  try {
    d = document_from_json(j);
  } catch (const Error& e) {
    fail(e.code(), "line " + std::to_string(line_no) + ": " + e.what());
  }
  if (d.id.empty())
    fail(ErrorCode::Schema, "line " + std::to_string(line_no) + ": document 'id' is required");
  return d;
}

Document document_from_text_file(const fs::path& file) {
  return document_from_text(file.stem().string(), read_file(file));
}

}  // namespace

Document document_from_text(std::string id, std::string_view text) {
  std::string bytes(text);
  if (bytes.substr(0, 3) == "\xEF\xBB\xBF") bytes.erase(0, 3);
  Document d;
  d.id = std::move(id);
  // Title is the first non-blank line.
  std::size_t start = 0;
  while (start < bytes.size()) {
    auto cut = bytes.find('\n', start);
    std::string line = bytes.substr(start, cut == std::string::npos ? std::string::npos
                                                                     : cut - start);
    start = cut == std::string::npos ? bytes.size() : cut + 1;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    d.title = line;
    break;
  }
  d.abstract_text = bytes.substr(std::min(start, bytes.size()));
  return d;
}

std::vector<Document> parse_jsonl_documents(std::string_view bytes) {
  std::vector<Document> docs;
  for_each_json_line(bytes, [&](const json& j, std::size_t line_no) {
    docs.push_back(document_from_line(j, line_no));
  });
  return docs;
}

std::vector<Document> read_corpus(const fs::path& path) {
  std::error_code ec;
  if (fs::is_directory(path, ec)) {
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(path, ec)) {
      if (!entry.is_regular_file()) continue;
      auto name = entry.path().filename().string();
      if (name.empty() || name[0] == '.') continue;
      files.push_back(entry.path());
    }
    if (ec) fail(ErrorCode::Io, "cannot list '" + path.string() + "': " + ec.message());
    std::sort(files.begin(), files.end());
    std::vector<Document> docs;
    for (const auto& f : files) docs.push_back(document_from_text_file(f));
    return docs;
  }
  return parse_jsonl_documents(read_file(path));
}

LabeledCorpus parse_labeled_jsonl(std::string_view bytes) {
  LabeledCorpus corpus;
  for_each_json_line(bytes, [&](const json& j, std::size_t line_no) {
    Document d = document_from_line(j, line_no);
    auto it = j.find("label");
    if (it == j.end() || !it->is_boolean())
      fail(ErrorCode::Schema,
           "line " + std::to_string(line_no) + ": boolean 'label' is required");
    if (!corpus.labels.emplace(d.id, it->get<bool>()).second)
      fail(ErrorCode::DuplicateId, "duplicate document id '" + d.id + "'");
    corpus.documents.push_back(std::move(d));
  });
  return corpus;
}

LabeledCorpus read_labeled_corpus(const fs::path& path) {
  if (fs::is_directory(path))
    fail(ErrorCode::Io, "'" + path.string() + "' is a directory, expected a JSON-lines file");
  return parse_labeled_jsonl(read_file(path));
}

void write_labeled_jsonl(const fs::path& path, const LabeledCorpus& corpus) {
  std::string out;
  for (const auto& d : corpus.documents) {
    json j = to_json(d);
    auto it = corpus.labels.find(d.id);
    if (it != corpus.labels.end()) j["label"] = it->second;
    out += j.dump() + "\n";
  }
  write_file(path, out);
}

}  // namespace ontowind
