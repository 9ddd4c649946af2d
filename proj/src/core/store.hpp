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

#ifndef ONTOWIND_CORE_STORE_HPP
#define ONTOWIND_CORE_STORE_HPP

#include <cstdint>
#include <filesystem>
#include <functional>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <span>
#include <string>
#include <unordered_set>
#include <vector>

#include <json.hpp>

#include "core/categorizer.hpp"
#include "core/corpus.hpp"

namespace ontowind {

struct ArticleRecord {
  std::string document_id;
  std::string title;
  std::optional<std::string> source_url;
  std::int64_t ingested_at = 0;  // seconds since the Unix epoch, UTC
  CategorizationResult result;

  friend bool operator==(const ArticleRecord&, const ArticleRecord&) = default;
};

// "2026-10-14T08:30:00Z"
std::string format_timestamp(std::int64_t seconds);
std::int64_t parse_timestamp(std::string_view text);

nlohmann::json to_json(const ArticleRecord& record);
std::string encode_record(const ArticleRecord& record);  // one line, no LF
ArticleRecord decode_record(std::string_view line);

// Append-only JSON-lines file of relevant articles. Opening a file whose last
// line was cut short by a crash drops that line. Any other unparsable line
// marks the store corrupted: reads still work, appends throw
// Error(StoreCorrupted).
class ArticleStore {
 public:
  explicit ArticleStore(std::filesystem::path path);
  ArticleStore(const ArticleStore&) = delete;
  ArticleStore& operator=(const ArticleStore&) = delete;

  const std::filesystem::path& path() const { return path_; }
  bool corrupted() const;
  std::string corruption_reason() const;

  std::size_t size() const;
  bool contains(const std::string& document_id) const;
  std::vector<ArticleRecord> page(std::size_t offset, std::size_t limit) const;

  // Appends records whose ids are new, in order, one line-atomic write each.
  // Returns a flag per input: true when stored, false for a known id.
  std::vector<bool> append(std::span<const ArticleRecord> records);

 private:
  void load();

  std::filesystem::path path_;
  mutable std::shared_mutex mutex_;
  std::mutex write_mutex_;
  std::vector<ArticleRecord> records_;
  std::unordered_set<std::string> ids_;
  std::optional<std::string> corruption_;
};

struct IngestReport {
  std::size_t scanned = 0;
  std::size_t relevant = 0;
  std::size_t stored = 0;
  std::size_t duplicates = 0;
  std::vector<std::string> duplicate_ids;

  friend bool operator==(const IngestReport&, const IngestReport&) = default;
};

nlohmann::json to_json(const IngestReport& report);

using Clock = std::function<std::int64_t()>;
std::int64_t system_now();

IngestReport ingest(const Lexicon& lexicon, std::span<const Document> docs, ArticleStore& store,
                    const CategorizeOptions& options = {}, const Clock& clock = system_now);
IngestReport ingest(const Lexicon& lexicon, const std::filesystem::path& source,
                    ArticleStore& store, const CategorizeOptions& options = {},
                    const Clock& clock = system_now);

}  // namespace ontowind

#endif  // ONTOWIND_CORE_STORE_HPP
