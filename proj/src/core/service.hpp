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

#ifndef ONTOWIND_CORE_SERVICE_HPP
#define ONTOWIND_CORE_SERVICE_HPP

#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <thread>

#include "core/categorizer.hpp"
#include "core/lexicon.hpp"
#include "core/ontology.hpp"
#include "core/store.hpp"

namespace httplib {
class Server;
}

namespace ontowind {

struct ServiceConfig {
  std::string ontology = "@default";
  std::filesystem::path store;
  std::string bind = "127.0.0.1";
  int port = 8080;
  double threshold = kDefaultThreshold;
  LexiconOptions lexicon;
  bool strict_label_weights = false;
  std::optional<std::filesystem::path> static_dir;
  // Relative ingest source paths resolve here.
  std::filesystem::path base_dir;
};

// Relative paths in the document resolve against base_dir.
ServiceConfig parse_service_config(std::string_view json_text,
                                   const std::filesystem::path& base_dir);
ServiceConfig load_service_config(const std::filesystem::path& path);

struct Response {
  int status = 200;
  std::string body;
};

using QueryParams = std::multimap<std::string, std::string>;

QueryParams parse_query(std::string_view query);

class PortalService {
 public:
  // Loads the ontology and opens the store; throws Error on failure.
  explicit PortalService(ServiceConfig config);
  ~PortalService();
  PortalService(const PortalService&) = delete;
  PortalService& operator=(const PortalService&) = delete;

  const ServiceConfig& config() const { return config_; }

  // Network-free dispatch; never throws.
  Response handle(std::string_view method, std::string_view path, const QueryParams& query,
                  std::string_view body);

  // Blocks until stop().
  void listen();
  // Serves on a background thread and returns the bound port.
  int start();
  void stop();

  // Re-reads the ontology; the old snapshot stays active on failure.
  std::size_t reload();

 private:
  struct Snapshot {
    Ontology ontology;
    Lexicon lexicon;
  };

  std::shared_ptr<const Snapshot> snapshot() const;
  std::shared_ptr<const Snapshot> load_snapshot() const;
  CategorizeOptions categorize_options() const;

  Response get_concepts(std::string_view id);
  Response get_instances(const QueryParams& query);
  Response post_categorize(std::string_view body);
  Response get_articles(const QueryParams& query);
  Response post_ingest(std::string_view body);
  Response post_reload();

  void configure_server();

  ServiceConfig config_;
  ArticleStore store_;
  mutable std::mutex snapshot_mutex_;
  std::shared_ptr<const Snapshot> snapshot_;
  std::mutex writer_mutex_;  // ingest and reload

  std::unique_ptr<httplib::Server> server_;
  std::thread thread_;
};

}  // namespace ontowind

#endif  // ONTOWIND_CORE_SERVICE_HPP
