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

#include "core/store.hpp"

#include <fcntl.h>
#include <unistd.h>

#include <cerrno>
#include <chrono>
#include <cstdio>
#include <cstring>
#include <ctime>

#include "core/error.hpp"
#include "core/io.hpp"
#include "core/json_codec.hpp"

namespace ontowind {

namespace fs = std::filesystem;
using nlohmann::json;

std::string format_timestamp(std::int64_t seconds) {
  std::time_t t = static_cast<std::time_t>(seconds);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::int64_t parse_timestamp(std::string_view text) {
  std::tm tm{};
  char z = 0;
  std::string s(text);
  if (std::sscanf(s.c_str(), "%4d-%2d-%2dT%2d:%2d:%2d%c", &tm.tm_year, &tm.tm_mon, &tm.tm_mday,
                  &tm.tm_hour, &tm.tm_min, &tm.tm_sec, &z) != 7 ||
      z != 'Z' || s.size() != 20)
    fail(ErrorCode::Schema, "timestamp '" + s + "' is not YYYY-MM-DDTHH:MM:SSZ");
  tm.tm_year -= 1900;
  tm.tm_mon -= 1;
  return static_cast<std::int64_t>(timegm(&tm));
}

std::int64_t system_now() {
  using namespace std::chrono;
  return duration_cast<seconds>(system_clock::now().time_since_epoch()).count();
}

json to_json(const ArticleRecord& r) {
  json j = {{"documentId", r.document_id},
            {"title", r.title},
            {"ingestedAt", format_timestamp(r.ingested_at)},
            {"result", to_json(r.result)}};
  if (r.source_url) j["sourceUrl"] = *r.source_url;
  return j;
}

std::string encode_record(const ArticleRecord& r) { return dump_canonical(to_json(r), -1); }

json to_json(const IngestReport& r) {
  return {{"scanned", r.scanned},
          {"relevant", r.relevant},
          {"stored", r.stored},
          {"duplicates", r.duplicates},
          {"duplicateIds", r.duplicate_ids}};
}

ArticleRecord decode_record(std::string_view line) {
  json j;
  try {
    j = json::parse(line.begin(), line.end());
  } catch (const json::parse_error& e) {
    fail(ErrorCode::Json, e.what());
  }
  try {
    ArticleRecord r;
    r.document_id = j.at("documentId").get<std::string>();
    r.title = j.at("title").get<std::string>();
    r.ingested_at = parse_timestamp(j.at("ingestedAt").get<std::string>());
    if (auto it = j.find("sourceUrl"); it != j.end()) r.source_url = it->get<std::string>();
    r.result = categorization_result_from_json(j.at("result"));
    return r;
  } catch (const json::exception& e) {
    fail(ErrorCode::Schema, e.what());
  }
}

ArticleStore::ArticleStore(fs::path path) : path_(std::move(path)) { load(); }

void ArticleStore::load() {
  std::error_code ec;
  if (!fs::exists(path_, ec)) {
    write_file(path_, "");
    return;
  }
  std::string bytes = read_file(path_);
  std::size_t start = 0, line_no = 0;
  while (start < bytes.size()) {
    auto cut = bytes.find('\n', start);
    const bool complete = cut != std::string::npos;
    std::string_view line(bytes.data() + start, (complete ? cut : bytes.size()) - start);
    ++line_no;
    try {
      if (!line.empty()) {
        ArticleRecord r = decode_record(line);
        if (!ids_.insert(r.document_id).second)
          fail(ErrorCode::DuplicateId, "duplicate id '" + r.document_id + "'");
        records_.push_back(std::move(r));
      }
      if (!complete) {
        // Last record survived intact but lost its newline.
        int fd = ::open(path_.c_str(), O_WRONLY | O_APPEND);
        if (fd < 0 || ::write(fd, "\n", 1) != 1) {
          if (fd >= 0) ::close(fd);
          fail(ErrorCode::Io, "cannot repair '" + path_.string() + "'");
        }
        ::close(fd);
      }
    } catch (const Error& e) {
      if (e.code() == ErrorCode::Io) throw;
      if (!complete) {
        fs::resize_file(path_, start);  // torn final write
        break;
      }
      corruption_ = "line " + std::to_string(line_no) + ": " + e.what();
      break;
    }
    start = complete ? cut + 1 : bytes.size();
  }
}

bool ArticleStore::corrupted() const {
  std::shared_lock lock(mutex_);
  return corruption_.has_value();
}

std::string ArticleStore::corruption_reason() const {
  std::shared_lock lock(mutex_);
  return corruption_.value_or("");
}

std::size_t ArticleStore::size() const {
  std::shared_lock lock(mutex_);
  return records_.size();
}

bool ArticleStore::contains(const std::string& document_id) const {
  std::shared_lock lock(mutex_);
  return ids_.count(document_id) > 0;
}

std::vector<ArticleRecord> ArticleStore::page(std::size_t offset, std::size_t limit) const {
  std::shared_lock lock(mutex_);
  if (offset >= records_.size()) return {};
  auto end = offset + std::min(limit, records_.size() - offset);
  return {records_.begin() + static_cast<std::ptrdiff_t>(offset),
          records_.begin() + static_cast<std::ptrdiff_t>(end)};
}

std::vector<bool> ArticleStore::append(std::span<const ArticleRecord> records) {
  std::lock_guard writer(write_mutex_);
  if (corrupted())
    fail(ErrorCode::StoreCorrupted,
         "store '" + path_.string() + "' is corrupted (" + corruption_reason() + ")");

  std::vector<bool> stored;
  stored.reserve(records.size());
  int fd = -1;
  for (const auto& r : records) {
    bool fresh;
    {
      std::shared_lock lock(mutex_);
      fresh = !ids_.count(r.document_id);
    }
    if (!fresh) {
      stored.push_back(false);
      continue;
    }
    if (fd < 0) {
      fd = ::open(path_.c_str(), O_WRONLY | O_APPEND | O_CREAT, 0644);
      if (fd < 0) fail(ErrorCode::Io, "cannot open '" + path_.string() + "': " + std::strerror(errno));
    }
    std::string line = encode_record(r) + "\n";
    ssize_t n = ::write(fd, line.data(), line.size());
    if (n != static_cast<ssize_t>(line.size())) {
      ::close(fd);
      fail(ErrorCode::Io, "short write to '" + path_.string() + "'");
    }
    {
      std::unique_lock lock(mutex_);
      ids_.insert(r.document_id);
      records_.push_back(r);
    }
    stored.push_back(true);
  }
  if (fd >= 0) {
    ::fsync(fd);
    ::close(fd);
  }
  return stored;
}

IngestReport ingest(const Lexicon& lexicon, std::span<const Document> docs, ArticleStore& store,
                    const CategorizeOptions& options, const Clock& clock) {
  auto results = categorize_corpus(lexicon, docs, options);
  IngestReport report;
  report.scanned = docs.size();
  std::vector<ArticleRecord> records;
  const std::int64_t now = clock();
  for (std::size_t i = 0; i < docs.size(); ++i) {
    if (!results[i].relevant) continue;
    ++report.relevant;
    records.push_back({docs[i].id, docs[i].title, docs[i].source_url, now, std::move(results[i])});
  }
  auto stored = store.append(records);
  for (std::size_t i = 0; i < records.size(); ++i) {
    if (stored[i]) {
      ++report.stored;
    } else {
      ++report.duplicates;
      report.duplicate_ids.push_back(records[i].document_id);
    }
  }
  return report;
}

IngestReport ingest(const Lexicon& lexicon, const fs::path& source, ArticleStore& store,
                    const CategorizeOptions& options, const Clock& clock) {
  std::error_code ec;
  if (!fs::exists(source, ec)) fail(ErrorCode::Io, "source '" + source.string() + "' not found");
  auto docs = read_corpus(source);
  return ingest(lexicon, docs, store, options, clock);
}

}  // namespace ontowind
