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

#include "ontowind/ontowind.h"

#include <json.hpp>

#include <cctype>
#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <string>

#include "core/categorizer.hpp"
#include "core/corpus.hpp"
#include "core/error.hpp"
#include "core/eval.hpp"
#include "core/io.hpp"
#include "core/json_codec.hpp"
#include "core/lexicon.hpp"
#include "core/ngram.hpp"
#include "core/ontology.hpp"
#include "core/service.hpp"
#include "core/store.hpp"
#include "core/text.hpp"

using nlohmann::json;
namespace ow = ontowind;

struct ow_ontology {
  ow::Ontology value;
};

struct ow_lexicon {
  ow::Lexicon value;
};

struct ow_store {
  explicit ow_store(const std::string& path) : value(path) {}
  ow::ArticleStore value;
};

struct ow_service {
  explicit ow_service(ow::ServiceConfig config) : value(std::move(config)) {}
  ow::PortalService value;
};

namespace {

thread_local std::string last_error;

ow_status set_error(ow_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

template <typename F>
ow_status guarded(F&& body) {
  try {
    body();
    return OW_OK;
  } catch (const ow::Error& e) {
    return set_error(static_cast<ow_status>(e.code()), e.what());
  } catch (const json::exception& e) {
    return set_error(OW_ERR_JSON, e.what());
  } catch (const std::bad_alloc&) {
    return set_error(OW_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return set_error(OW_ERR_INTERNAL, e.what());
  }
}

void require(bool condition, const char* what) {
  if (!condition) ow::fail(ow::ErrorCode::InvalidArgument, what);
}

char* dup_string(std::string_view s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.data(), s.size());
  out[s.size()] = '\0';
  return out;
}

void emit(const json& j, char** out) { *out = dup_string(ow::dump_canonical(j) + "\n"); }

std::set<std::string> parse_languages(const char* list) {
  std::set<std::string> out;
  std::string item;
  auto flush = [&] {
    if (item.empty()) return;
    for (auto& ch : item) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
    out.insert(item);
    item.clear();
  };
  for (const char* p = list; *p; ++p) {
    if (*p == ',')
      flush();
    else if (!std::isspace(static_cast<unsigned char>(*p)))
      item += *p;
  }
  flush();
  if (out.empty()) ow::fail(ow::ErrorCode::InvalidArgument, "language list is empty");
  return out;
}

ow::CategorizeOptions categorize_options(const ow_categorize_options* options) {
  if (!options) return {};
  return {options->threshold, options->strict_label_weights != 0};
}

ow::Format to_format(ow_format f, ow::Format fallback) {
  switch (f) {
    case OW_FORMAT_CANONICAL:
      return ow::Format::Canonical;
    case OW_FORMAT_OWL:
      return ow::Format::Owl;
    case OW_FORMAT_AUTO:
      return fallback;
  }
  ow::fail(ow::ErrorCode::InvalidArgument, "unknown format");
}

json instances_json(const std::vector<ow::Instance>& instances) {
  json arr = json::array();
  for (const auto& i : instances) arr.push_back(ow::to_json(i));
  return arr;
}

}  // namespace

extern "C" {

const char* ow_version(void) { return "0.1.0"; }

const char* ow_status_name(ow_status status) {
  if (status == OW_OK) return "Ok";
  if (status < OW_ERR_INVALID_ARGUMENT || status > OW_ERR_INTERNAL) return "Unknown";
  // Names are static string literals.
  return ow::error_code_name(static_cast<ow::ErrorCode>(status)).data();
}

const char* ow_last_error(void) { return last_error.c_str(); }

void ow_string_free(char* s) { std::free(s); }

ow_status ow_ontology_load_file(const char* path, int validate, ow_ontology** out) {
  return guarded([&] {
    require(path && out, "path and out are required");
    *out = new ow_ontology{ow::load_ontology_file(path, {validate != 0})};
  });
}

ow_status ow_ontology_parse(const char* data, size_t len, ow_format format, int validate,
                            ow_ontology** out) {
  return guarded([&] {
    require((data || len == 0) && out, "data and out are required");
    std::string_view bytes(data ? data : "", len);
    ow::ParseOptions opts{validate != 0};
    ow::Format f = to_format(format, ow::detect_format(bytes));
    *out = new ow_ontology{f == ow::Format::Owl ? ow::parse_owl(bytes, opts)
                                                : ow::parse_canonical(bytes, opts)};
  });
}

ow_status ow_ontology_load_seed(ow_ontology** out) {
  return guarded([&] {
    require(out, "out is required");
    *out = new ow_ontology{ow::load_seed()};
  });
}

void ow_ontology_free(ow_ontology* ontology) { delete ontology; }

ow_status ow_ontology_serialize(const ow_ontology* ontology, ow_format format, char** out) {
  return guarded([&] {
    require(ontology && out, "ontology and out are required");
    *out = dup_string(ow::serialize_ontology(ontology->value,
                                             to_format(format, ow::Format::Canonical)));
  });
}

ow_status ow_ontology_save_file(const ow_ontology* ontology, const char* path, ow_format format) {
  return guarded([&] {
    require(ontology && path, "ontology and path are required");
    ow::Format f = to_format(format, ow::format_for_path(path));
    ow::write_file(path, ow::serialize_ontology(ontology->value, f));
  });
}

ow_status ow_ontology_counts(const ow_ontology* ontology, size_t* concepts, size_t* roots,
                             size_t* instances) {
  return guarded([&] {
    require(ontology, "ontology is required");
    if (concepts) *concepts = ontology->value.concepts().size();
    if (roots) *roots = ontology->value.roots().size();
    if (instances) *instances = ontology->value.instances().size();
  });
}

ow_status ow_ontology_validate(const ow_ontology* ontology, char** violations_json,
                               size_t* count) {
  return guarded([&] {
    require(ontology, "ontology is required");
    auto violations = ow::validate(ontology->value);
    if (count) *count = violations.size();
    if (violations_json) emit(ow::to_json(violations), violations_json);
  });
}

ow_status ow_ontology_tree(const ow_ontology* ontology, const char* root, char** out) {
  return guarded([&] {
    require(ontology && out, "ontology and out are required");
    const auto& o = ontology->value;
    if (root) {
      emit(ow::to_json(ow::subtree(o, root)), out);
      return;
    }
    json roots = json::array();
    for (const auto& id : o.roots()) roots.push_back(ow::to_json(ow::subtree(o, id)));
    emit({{"roots", std::move(roots)}}, out);
  });
}

ow_status ow_ontology_instances(const ow_ontology* ontology, const char* concept_id,
                                int transitive, char** out) {
  return guarded([&] {
    require(ontology && out, "ontology and out are required");
    if (concept_id) {
      emit(instances_json(ow::instances_of(ontology->value, concept_id, transitive != 0)), out);
      return;
    }
    auto all = ontology->value.instances();
    std::sort(all.begin(), all.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
    emit(instances_json(all), out);
  });
}

ow_status ow_lexicon_build(const ow_ontology* ontology, const ow_lexicon_options* options,
                           ow_lexicon** out) {
  return guarded([&] {
    require(ontology && out, "ontology and out are required");
    ow::LexiconOptions opts;
    if (options) {
      if (options->languages) opts.languages = parse_languages(options->languages);
      opts.labels_only = options->labels_only != 0;
      opts.normalize.fold_diacritics = options->fold_diacritics != 0;
    }
    *out = new ow_lexicon{ow::build_lexicon(ontology->value, opts)};
  });
}

void ow_lexicon_free(ow_lexicon* lexicon) { delete lexicon; }

ow_status ow_lexicon_size(const ow_lexicon* lexicon, size_t* out) {
  return guarded([&] {
    require(lexicon && out, "lexicon and out are required");
    *out = lexicon->value.size();
  });
}

ow_status ow_find_matches(const ow_lexicon* lexicon, const char* text, char** out) {
  return guarded([&] {
    require(lexicon && text && out, "lexicon, text and out are required");
    json arr = json::array();
    for (const auto& m : lexicon->value.find_matches(text)) arr.push_back(ow::to_json(m));
    emit(arr, out);
  });
}

ow_status ow_normalize(const char* text, int fold_diacritics, char** out) {
  return guarded([&] {
    require(text && out, "text and out are required");
    emit(ow::normalize(text, {fold_diacritics != 0}), out);
  });
}

ow_status ow_reciprocal_rank_weight(int64_t rank, double* out) {
  return guarded([&] {
    require(out, "out is required");
    *out = ow::reciprocal_rank_weight(rank);
  });
}

ow_status ow_categorize(const ow_lexicon* lexicon, const char* document_json,
                        const ow_categorize_options* options, char** result_json) {
  return guarded([&] {
    require(lexicon && document_json && result_json, "lexicon, document and out are required");
    json j;
    try {
      j = json::parse(document_json);
    } catch (const json::parse_error& e) {
      ow::fail(ow::ErrorCode::Json, e.what());
    }
    auto doc = ow::document_from_json(j);
    emit(ow::to_json(ow::categorize(lexicon->value, doc, categorize_options(options))),
         result_json);
  });
}

ow_status ow_categorize_text(const ow_lexicon* lexicon, const char* document_id, const char* text,
                             const ow_categorize_options* options, char** result_json) {
  return guarded([&] {
    require(lexicon && text && result_json, "lexicon, text and out are required");
    auto doc = ow::document_from_text(document_id ? document_id : "", text);
    emit(ow::to_json(ow::categorize(lexicon->value, doc, categorize_options(options))),
         result_json);
  });
}

ow_status ow_categorize_corpus(const ow_lexicon* lexicon, const char* corpus_path,
                               const ow_categorize_options* options, char** out) {
  return guarded([&] {
    require(lexicon && corpus_path && out, "lexicon, corpus and out are required");
    auto docs = ow::read_corpus(corpus_path);
    json arr = json::array();
    for (const auto& r : ow::categorize_corpus(lexicon->value, docs, categorize_options(options)))
      arr.push_back(ow::to_json(r));
    emit(arr, out);
  });
}

void ow_mine_options_init(ow_mine_options* options) {
  if (!options) return;
  *options = ow_mine_options{};
  options->n_min = 1;
  options->n_max = 3;
  options->min_freq = 5;
  options->top_k = 50;
  options->uniform_weights = 0;
  options->uniform_weight = 1.0;
}

ow_status ow_mine(const char* corpus_path, const ow_mine_options* options, char** out) {
  return guarded([&] {
    require(corpus_path && out, "corpus and out are required");
    ow_mine_options defaults;
    ow_mine_options_init(&defaults);
    const ow_mine_options& o = options ? *options : defaults;
    ow::NgramOptions ng;
    ng.n_min = o.n_min;
    ng.n_max = o.n_max;
    ng.min_freq = o.min_freq;
    ng.stopwords = o.stopwords_path ? ow::parse_stopwords(ow::read_file(o.stopwords_path))
                                    : ow::default_stopwords();
    auto docs = ow::read_corpus(corpus_path);
    auto ngrams = ow::extract_ngrams(docs, ng);
    auto rule = o.uniform_weights ? ow::WeightRule::uniform(o.uniform_weight)
                                  : ow::WeightRule::reciprocal_rank();
    auto entries = ow::scaffold(ngrams, o.top_k, rule);
    auto draft = ow::scaffold_ontology(entries, o.language ? o.language : "EN");
    json jn = json::array(), js = json::array();
    for (const auto& n : ngrams) jn.push_back(ow::to_json(n));
    for (const auto& e : entries) js.push_back(ow::to_json(e));
    emit({{"ngrams", std::move(jn)},
          {"scaffold", std::move(js)},
          {"ontology", json::parse(ow::serialize_canonical(draft))}},
         out);
  });
}

ow_status ow_accuracy(uint64_t tp, uint64_t fn, uint64_t tn, uint64_t fp, double* out) {
  return guarded([&] {
    require(out, "out is required");
    *out = ow::accuracy({tp, fn, tn, fp});
  });
}

ow_status ow_evaluate(const ow_lexicon* lexicon, const char* labeled_corpus_path,
                      const ow_categorize_options* options, char** out) {
  return guarded([&] {
    require(lexicon && labeled_corpus_path && out, "lexicon, corpus and out are required");
    auto corpus = ow::read_labeled_corpus(labeled_corpus_path);
    emit(ow::to_json(ow::evaluate(lexicon->value, corpus, categorize_options(options))), out);
  });
}

ow_status ow_compare(const ow_lexicon* a, const ow_lexicon* b, const char* labeled_corpus_path,
                     const ow_categorize_options* options, char** out) {
  return guarded([&] {
    require(a && b && labeled_corpus_path && out, "lexicons, corpus and out are required");
    auto corpus = ow::read_labeled_corpus(labeled_corpus_path);
    emit(ow::to_json(ow::compare(a->value, b->value, corpus, categorize_options(options))), out);
  });
}

ow_status ow_generate_corpus(const ow_lexicon* lexicon, size_t documents, uint64_t seed,
                             const char* out_path) {
  return guarded([&] {
    require(lexicon && out_path, "lexicon and out_path are required");
    ow::SyntheticCorpusOptions opts;
    opts.documents = documents;
    opts.seed = seed;
    ow::write_labeled_jsonl(out_path, ow::generate_synthetic_corpus(lexicon->value, opts).corpus);
  });
}

ow_status ow_store_open(const char* path, ow_store** out) {
  return guarded([&] {
    require(path && out, "path and out are required");
    *out = new ow_store(path);
  });
}

void ow_store_free(ow_store* store) { delete store; }

ow_status ow_store_size(const ow_store* store, size_t* out) {
  return guarded([&] {
    require(store && out, "store and out are required");
    *out = store->value.size();
  });
}

ow_status ow_store_articles(const ow_store* store, size_t offset, size_t limit, char** out) {
  return guarded([&] {
    require(store && out, "store and out are required");
    json arr = json::array();
    for (const auto& r : store->value.page(offset, limit)) arr.push_back(ow::to_json(r));
    emit({{"total", store->value.size()},
          {"offset", offset},
          {"limit", limit},
          {"articles", std::move(arr)}},
         out);
  });
}

ow_status ow_ingest(const ow_lexicon* lexicon, const char* corpus_path, ow_store* store,
                    const ow_categorize_options* options, char** report_json) {
  return guarded([&] {
    require(lexicon && corpus_path && store, "lexicon, corpus and store are required");
    auto report = ow::ingest(lexicon->value, std::filesystem::path(corpus_path), store->value,
                             categorize_options(options));
    if (report_json) emit(ow::to_json(report), report_json);
  });
}

ow_status ow_service_create(const char* config_json, const char* base_dir, ow_service** out) {
  return guarded([&] {
    require(config_json && out, "config and out are required");
    *out = new ow_service(ow::parse_service_config(config_json, base_dir ? base_dir : ""));
  });
}

ow_status ow_service_create_from_file(const char* config_path, ow_service** out) {
  return guarded([&] {
    require(config_path && out, "config path and out are required");
    *out = new ow_service(ow::load_service_config(config_path));
  });
}

void ow_service_free(ow_service* service) { delete service; }

ow_status ow_service_run(ow_service* service) {
  return guarded([&] {
    require(service, "service is required");
    service->value.listen();
  });
}

ow_status ow_service_start(ow_service* service, int* port) {
  return guarded([&] {
    require(service, "service is required");
    int p = service->value.start();
    if (port) *port = p;
  });
}

ow_status ow_service_stop(ow_service* service) {
  return guarded([&] {
    require(service, "service is required");
    service->value.stop();
  });
}

ow_status ow_service_handle(ow_service* service, const char* method, const char* path,
                            const char* query, const char* body, int* http_status,
                            char** response_body) {
  return guarded([&] {
    require(service && method && path && http_status && response_body,
            "service, method, path and outputs are required");
    auto r = service->value.handle(method, path, ow::parse_query(query ? query : ""),
                                   body ? body : "");
    *http_status = r.status;
    *response_body = dup_string(r.body);
  });
}

}  // extern "C"
