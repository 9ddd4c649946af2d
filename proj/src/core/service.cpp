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

#include "core/service.hpp"

#include <httplib.h>
#include <json.hpp>

#include <charconv>
#include <cmath>
#include <cstdio>

#include "core/error.hpp"
#include "core/io.hpp"
#include "core/json_codec.hpp"

namespace ontowind {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr std::size_t kDefaultPageSize = 50;
constexpr std::size_t kMaxPageSize = 1000;

fs::path resolve(const fs::path& base, const fs::path& p) {
  return p.is_relative() && !base.empty() ? base / p : p;
}

bool is_pseudo_path(std::string_view p) { return p == kSeedPath || p == kDefaultPath; }

int http_status(ErrorCode code) {
  switch (code) {
    case ErrorCode::UnknownId:
      return 404;
    case ErrorCode::InvalidArgument:
    case ErrorCode::Json:
    case ErrorCode::Schema:
    case ErrorCode::Io:
      return 400;
    case ErrorCode::StoreCorrupted:
      return 503;
    default:
      return 500;
  }
}

Response json_response(int status, const json& j) { return {status, dump_canonical(j, -1) + "\n"}; }

Response error_response(int status, std::string_view code, std::string_view message) {
  return json_response(status, {{"error", {{"code", code}, {"message", message}}}});
}

Response error_response(const Error& e) {
  return error_response(http_status(e.code()), error_code_name(e.code()), e.what());
}

json parse_body(std::string_view body) {
  try {
    return json::parse(body.begin(), body.end());
  } catch (const json::parse_error& e) {
    fail(ErrorCode::Json, std::string("request body is not valid JSON: ") + e.what());
  }
}

std::optional<std::string> query_value(const QueryParams& q, const char* key) {
  auto it = q.find(key);
  if (it == q.end()) return std::nullopt;
  return it->second;
}

std::size_t query_size(const QueryParams& q, const char* key, std::size_t fallback) {
  auto v = query_value(q, key);
  if (!v) return fallback;
  std::size_t out = 0;
  auto [end, ec] = std::from_chars(v->data(), v->data() + v->size(), out);
  if (ec != std::errc() || end != v->data() + v->size() || v->empty())
    fail(ErrorCode::InvalidArgument, std::string("'") + key + "' must be a non-negative integer");
  return out;
}

bool query_bool(const QueryParams& q, const char* key, bool fallback) {
  auto v = query_value(q, key);
  if (!v) return fallback;
  if (*v == "true" || *v == "1") return true;
  if (*v == "false" || *v == "0") return false;
  fail(ErrorCode::InvalidArgument, std::string("'") + key + "' must be true or false");
}

}  // namespace

ServiceConfig parse_service_config(std::string_view text, const fs::path& base_dir) {
  json j = parse_body(text);
  if (!j.is_object()) fail(ErrorCode::Schema, "service config must be a JSON object");
  ServiceConfig c;
  c.base_dir = base_dir;
  auto str = [](const json& v, const std::string& key) {
    if (!v.is_string()) fail(ErrorCode::Schema, "config '" + key + "' must be a string");
    return v.get<std::string>();
  };
  auto boolean = [](const json& v, const std::string& key) {
    if (!v.is_boolean()) fail(ErrorCode::Schema, "config '" + key + "' must be a boolean");
    return v.get<bool>();
  };
  bool have_store = false;
  for (const auto& [key, v] : j.items()) {
    if (key == "ontology") {
      c.ontology = str(v, key);
      if (!is_pseudo_path(c.ontology)) c.ontology = resolve(base_dir, c.ontology).string();
    } else if (key == "store") {
      c.store = resolve(base_dir, str(v, key));
      have_store = true;
    } else if (key == "bind") {
      c.bind = str(v, key);
    } else if (key == "port") {
      if (!v.is_number_integer() || v.get<std::int64_t>() < 0 || v.get<std::int64_t>() > 65535)
        fail(ErrorCode::Schema, "config 'port' must be an integer in [0, 65535]");
      c.port = v.get<int>();
    } else if (key == "threshold") {
      if (!v.is_number() || !(v.get<double>() > 0) || !std::isfinite(v.get<double>()))
        fail(ErrorCode::Schema, "config 'threshold' must be a positive number");
      c.threshold = v.get<double>();
    } else if (key == "languages") {
      if (!v.is_array() || v.empty())
        fail(ErrorCode::Schema, "config 'languages' must be a non-empty array");
      c.lexicon.languages.clear();
      for (const auto& l : v) c.lexicon.languages.insert(str(l, key));
    } else if (key == "labelsOnly") {
      c.lexicon.labels_only = boolean(v, key);
    } else if (key == "strictLabelWeights") {
      c.strict_label_weights = boolean(v, key);
    } else if (key == "foldDiacritics") {
      c.lexicon.normalize.fold_diacritics = boolean(v, key);
    } else if (key == "staticDir") {
      c.static_dir = resolve(base_dir, str(v, key));
    } else {
      fail(ErrorCode::Schema, "unknown config key '" + key + "'");
    }
  }
  if (!have_store) fail(ErrorCode::Schema, "config requires 'store'");
  return c;
}

ServiceConfig load_service_config(const fs::path& path) {
  return parse_service_config(read_file(path), path.parent_path());
}

QueryParams parse_query(std::string_view query) {
  QueryParams out;
  httplib::detail::parse_query_text(query.data(), query.size(), out);
  return out;
}

PortalService::PortalService(ServiceConfig config)
    : config_(std::move(config)), store_(config_.store) {
  snapshot_ = load_snapshot();
}

PortalService::~PortalService() { stop(); }

std::shared_ptr<const PortalService::Snapshot> PortalService::load_snapshot() const {
  Ontology o = load_ontology_file(config_.ontology);
  Lexicon lex = build_lexicon(o, config_.lexicon);
  return std::make_shared<const Snapshot>(Snapshot{std::move(o), std::move(lex)});
}

std::shared_ptr<const PortalService::Snapshot> PortalService::snapshot() const {
  std::lock_guard lock(snapshot_mutex_);
  return snapshot_;
}

CategorizeOptions PortalService::categorize_options() const {
  return {config_.threshold, config_.strict_label_weights};
}

std::size_t PortalService::reload() {
  std::lock_guard writer(writer_mutex_);
  auto fresh = load_snapshot();
  std::size_t n = fresh->ontology.concepts().size();
  std::lock_guard lock(snapshot_mutex_);
  snapshot_ = std::move(fresh);
  return n;
}

Response PortalService::handle(std::string_view method, std::string_view path,
                               const QueryParams& query, std::string_view body) {
  constexpr std::string_view kConceptPrefix = "/api/concepts/";
  try {
    const bool get = method == "GET", post = method == "POST";
    auto route = [&](bool allowed) -> std::optional<Response> {
      if (allowed) return std::nullopt;
      return error_response(405, "MethodNotAllowed",
                            std::string(method) + " not allowed on " + std::string(path));
    };
    if (path == "/api/concepts") {
      if (auto r = route(get)) return *r;
      return get_concepts({});
    }
    if (path.substr(0, kConceptPrefix.size()) == kConceptPrefix && path.size() > kConceptPrefix.size()) {
      if (auto r = route(get)) return *r;
      return get_concepts(path.substr(kConceptPrefix.size()));
    }
    if (path == "/api/instances") {
      if (auto r = route(get)) return *r;
      return get_instances(query);
    }
    if (path == "/api/categorize") {
      if (auto r = route(post)) return *r;
      return post_categorize(body);
    }
    if (path == "/api/articles") {
      if (auto r = route(get)) return *r;
      return get_articles(query);
    }
    if (path == "/api/ingest") {
      if (auto r = route(post)) return *r;
      return post_ingest(body);
    }
    if (path == "/api/admin/reload") {
      if (auto r = route(post)) return *r;
      return post_reload();
    }
    return error_response(404, "NotFound", "no route for " + std::string(path));
  } catch (const Error& e) {
    return error_response(e);
  } catch (const std::exception& e) {
    return error_response(500, error_code_name(ErrorCode::Internal), e.what());
  }
}

Response PortalService::get_concepts(std::string_view id) {
  auto snap = snapshot();
  if (id.empty()) {
    json roots = json::array();
    for (const auto& root : snap->ontology.roots())
      roots.push_back(to_json(subtree(snap->ontology, root)));
    return json_response(200, {{"roots", std::move(roots)}});
  }
  return json_response(200, to_json(subtree(snap->ontology, id)));
}

Response PortalService::get_instances(const QueryParams& query) {
  auto snap = snapshot();
  bool transitive = query_bool(query, "transitive", false);
  json arr = json::array();
  if (auto concept_id = query_value(query, "concept")) {
    for (const auto& i : instances_of(snap->ontology, *concept_id, transitive))
      arr.push_back(to_json(i));
  } else {
    std::vector<const Instance*> all;
    for (const auto& i : snap->ontology.instances()) all.push_back(&i);
    std::sort(all.begin(), all.end(), [](auto* a, auto* b) { return a->id < b->id; });
    for (const auto* i : all) arr.push_back(to_json(*i));
  }
  return json_response(200, arr);
}

Response PortalService::post_categorize(std::string_view body) {
  auto snap = snapshot();
  json j = parse_body(body);
  Document doc = document_from_json(j);
  CategorizeOptions options = categorize_options();
  if (auto it = j.find("threshold"); it != j.end() && !it->is_null()) {
    if (!it->is_number()) fail(ErrorCode::Schema, "'threshold' must be a number");
    options.threshold = it->get<double>();
  }
  return json_response(200, to_json(categorize(snap->lexicon, doc, options)));
}

Response PortalService::get_articles(const QueryParams& query) {
  std::size_t offset = query_size(query, "offset", 0);
  std::size_t limit = query_size(query, "limit", kDefaultPageSize);
  if (limit < 1 || limit > kMaxPageSize)
    fail(ErrorCode::InvalidArgument, "'limit' must be in [1, " + std::to_string(kMaxPageSize) + "]");
  json arr = json::array();
  for (const auto& r : store_.page(offset, limit)) arr.push_back(to_json(r));
  return json_response(200, {{"total", store_.size()},
                             {"offset", offset},
                             {"limit", limit},
                             {"articles", std::move(arr)}});
}

Response PortalService::post_ingest(std::string_view body) {
  json j = parse_body(body);
  if (!j.is_object() || !j.contains("sourcePath") || !j["sourcePath"].is_string())
    fail(ErrorCode::Schema, "body must be {\"sourcePath\": string}");
  fs::path source = resolve(config_.base_dir, j["sourcePath"].get<std::string>());
  std::lock_guard writer(writer_mutex_);
  auto snap = snapshot();
  return json_response(200, to_json(ingest(snap->lexicon, source, store_, categorize_options())));
}

Response PortalService::post_reload() {
  std::size_t n = reload();
  return json_response(200, {{"reloaded", true}, {"concepts", n}});
}

void PortalService::configure_server() {
  server_ = std::make_unique<httplib::Server>();
  if (config_.static_dir && !server_->set_mount_point("/", config_.static_dir->string()))
    fail(ErrorCode::Io, "static directory '" + config_.static_dir->string() + "' not found");
  auto dispatch = [this](const httplib::Request& req, httplib::Response& res) {
    QueryParams q(req.params.begin(), req.params.end());
    Response r = handle(req.method, req.path, q, req.body);
    res.status = r.status;
    res.set_content(r.body, "application/json");
  };
  const std::string api = R"(/api/.*)";
  server_->Get(api, dispatch);
  server_->Post(api, dispatch);
  server_->Put(api, dispatch);
  server_->Delete(api, dispatch);
  server_->Patch(api, dispatch);
  server_->set_logger([](const httplib::Request& req, const httplib::Response& res) {
    std::fprintf(stderr, "%s %s %d\n", req.method.c_str(), req.path.c_str(), res.status);
  });
}

void PortalService::listen() {
  configure_server();
  if (!server_->listen(config_.bind, config_.port))
    fail(ErrorCode::Io, "cannot listen on " + config_.bind + ":" + std::to_string(config_.port));
}

int PortalService::start() {
  stop();
  configure_server();
  int port = config_.port;
  if (port == 0) {
    port = server_->bind_to_any_port(config_.bind);
    if (port < 0) fail(ErrorCode::Io, "cannot bind " + config_.bind);
  } else if (!server_->bind_to_port(config_.bind, port)) {
    fail(ErrorCode::Io, "cannot bind " + config_.bind + ":" + std::to_string(port));
  }
  thread_ = std::thread([s = server_.get()] { s->listen_after_bind(); });
  server_->wait_until_ready();
  return port;
}

void PortalService::stop() {
  if (server_) server_->stop();
  if (thread_.joinable()) thread_.join();
}

}  // namespace ontowind
