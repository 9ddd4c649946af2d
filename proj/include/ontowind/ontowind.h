/*
 * Copyright 2026 The OntoWind Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/*
 * C interface to the ontowind library: a fuzzy-weighted multilingual
 * wind-energy ontology, an ontology-backed text categorizer, an n-gram miner
 * for ontology bootstrapping, an evaluation harness and an HTTP portal
 * service.
 *
 * Conventions:
 *  - Every fallible call returns ow_status. On failure ow_last_error() holds
 *    a message for the calling thread until its next failing call.
 *  - Handles are opaque and owned by the caller; release them with the
 *    matching *_free function. Free functions accept NULL.
 *  - Strings returned through char** are NUL-terminated UTF-8 owned by the
 *    caller; release them with ow_string_free.
 *  - Structured results are JSON documents (UTF-8, sorted keys).
 *  - Ontology and lexicon handles are immutable and may be shared between
 *    threads.
 */

#ifndef ONTOWIND_H
#define ONTOWIND_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(ONTOWIND_BUILDING)
#    define OW_API __declspec(dllexport)
#  else
#    define OW_API __declspec(dllimport)
#  endif
#else
#  define OW_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ow_status {
  OW_OK = 0,
  OW_ERR_INVALID_ARGUMENT = 1,
  OW_ERR_UNKNOWN_ID = 2,
  OW_ERR_IO = 3,
  OW_ERR_XML = 4,
  OW_ERR_UNSUPPORTED = 5,
  OW_ERR_VALIDATION = 6,
  OW_ERR_JSON = 7,
  OW_ERR_SCHEMA = 8,
  OW_ERR_DUPLICATE_ID = 9,
  OW_ERR_LABEL_MISMATCH = 10,
  OW_ERR_EMPTY_MATRIX = 11,
  OW_ERR_STORE_CORRUPTED = 12,
  OW_ERR_INTERNAL = 13
} ow_status;

typedef enum ow_format {
  OW_FORMAT_AUTO = 0, /* sniff content when reading; canonical when writing */
  OW_FORMAT_CANONICAL = 1,
  OW_FORMAT_OWL = 2
} ow_format;

typedef struct ow_ontology ow_ontology;
typedef struct ow_lexicon ow_lexicon;
typedef struct ow_store ow_store;
typedef struct ow_service ow_service;

OW_API const char* ow_version(void);
OW_API const char* ow_status_name(ow_status status);
OW_API const char* ow_last_error(void);
OW_API void ow_string_free(char* s);

/* ---- ontology ---------------------------------------------------------- */

/* `validate` != 0 rejects ontologies with violations (OW_ERR_VALIDATION).
 * The path "@seed" loads the embedded seed ontology. */
OW_API ow_status ow_ontology_load_file(const char* path, int validate, ow_ontology** out);
OW_API ow_status ow_ontology_parse(const char* data, size_t len, ow_format format,
                                   int validate, ow_ontology** out);
OW_API ow_status ow_ontology_load_seed(ow_ontology** out);
OW_API void ow_ontology_free(ow_ontology* ontology);

OW_API ow_status ow_ontology_serialize(const ow_ontology* ontology, ow_format format,
                                       char** out);
OW_API ow_status ow_ontology_save_file(const ow_ontology* ontology, const char* path,
                                       ow_format format);

OW_API ow_status ow_ontology_counts(const ow_ontology* ontology, size_t* concepts,
                                    size_t* roots, size_t* instances);

/* JSON array of {subject, rule, message}; *count receives its length. */
OW_API ow_status ow_ontology_validate(const ow_ontology* ontology, char** violations_json,
                                      size_t* count);

/* `root` NULL returns {"roots": [tree...]}; otherwise the subtree node. */
OW_API ow_status ow_ontology_tree(const ow_ontology* ontology, const char* root, char** out);

/* JSON array of {id, conceptId, attributes}. `concept_id` NULL lists all. */
OW_API ow_status ow_ontology_instances(const ow_ontology* ontology, const char* concept_id,
                                       int transitive, char** out);

/* ---- lexicon & categorization ----------------------------------------- */

typedef struct ow_lexicon_options {
  const char* languages; /* comma-separated codes, e.g. "EN,TR"; NULL = "EN" */
  int labels_only;
  int fold_diacritics;
} ow_lexicon_options;

/* `options` NULL selects the defaults. */
OW_API ow_status ow_lexicon_build(const ow_ontology* ontology, const ow_lexicon_options* options,
                                  ow_lexicon** out);
OW_API void ow_lexicon_free(ow_lexicon* lexicon);
OW_API ow_status ow_lexicon_size(const ow_lexicon* lexicon, size_t* out);

/* JSON array of {conceptId, term, language, kind, weight, start, end}. */
OW_API ow_status ow_find_matches(const ow_lexicon* lexicon, const char* text, char** out);

/* JSON array of normalized tokens. */
OW_API ow_status ow_normalize(const char* text, int fold_diacritics, char** out);

OW_API ow_status ow_reciprocal_rank_weight(int64_t rank, double* out);

typedef struct ow_categorize_options {
  double threshold; /* must be > 0; 1.0 is the standard rule */
  int strict_label_weights;
} ow_categorize_options;

/* `options` NULL selects threshold 1.0. `document_json` is {id?, title?,
 * abstractText?, keywords?}. The result is {documentId, matchedConcepts,
 * score, threshold, relevant, matches}. */
OW_API ow_status ow_categorize(const ow_lexicon* lexicon, const char* document_json,
                               const ow_categorize_options* options, char** result_json);

/* Plain text: the first non-blank line is the title, the rest the abstract. */
OW_API ow_status ow_categorize_text(const ow_lexicon* lexicon, const char* document_id,
                                    const char* text, const ow_categorize_options* options,
                                    char** result_json);

/* Categorizes a corpus (directory of text files or JSON lines); JSON array of
 * results in corpus order. */
OW_API ow_status ow_categorize_corpus(const ow_lexicon* lexicon, const char* corpus_path,
                                      const ow_categorize_options* options, char** out);

/* ---- n-gram mining ----------------------------------------------------- */

typedef struct ow_mine_options {
  size_t n_min;          /* 1..5 */
  size_t n_max;          /* n_min..5 */
  size_t min_freq;       /* >= 1 */
  size_t top_k;          /* >= 1 */
  int uniform_weights;   /* 0 = reciprocal rank, else uniform_weight */
  double uniform_weight;
  const char* stopwords_path; /* NULL = built-in English list */
  const char* language;       /* scaffold label language; NULL = "EN" */
} ow_mine_options;

/* Fills in the defaults: n 1..3, min_freq 5, top_k 50, reciprocal rank. */
OW_API void ow_mine_options_init(ow_mine_options* options);

/* {"ngrams": [...], "scaffold": [...], "ontology": <canonical document>}.
 * `options` NULL selects the defaults. */
OW_API ow_status ow_mine(const char* corpus_path, const ow_mine_options* options, char** out);

/* ---- evaluation -------------------------------------------------------- */

OW_API ow_status ow_accuracy(uint64_t tp, uint64_t fn, uint64_t tn, uint64_t fp, double* out);

/* {tp, fn, tn, fp, total, accuracy, accuracyText, accuracyPercent, ...} */
OW_API ow_status ow_evaluate(const ow_lexicon* lexicon, const char* labeled_corpus_path,
                             const ow_categorize_options* options, char** out);

/* {a, b, disagreements} */
OW_API ow_status ow_compare(const ow_lexicon* a, const ow_lexicon* b,
                            const char* labeled_corpus_path,
                            const ow_categorize_options* options, char** out);

/* Writes a synthetic labeled corpus (JSON lines) planted with lexicon terms. */
OW_API ow_status ow_generate_corpus(const ow_lexicon* lexicon, size_t documents, uint64_t seed,
                                    const char* out_path);

/* ---- article store & ingestion ---------------------------------------- */

OW_API ow_status ow_store_open(const char* path, ow_store** out);
OW_API void ow_store_free(ow_store* store);
OW_API ow_status ow_store_size(const ow_store* store, size_t* out);

/* {"total", "offset", "limit", "articles": [...]} */
OW_API ow_status ow_store_articles(const ow_store* store, size_t offset, size_t limit,
                                   char** out);

/* {scanned, relevant, stored, duplicates, duplicateIds} */
OW_API ow_status ow_ingest(const ow_lexicon* lexicon, const char* corpus_path, ow_store* store,
                           const ow_categorize_options* options, char** report_json);

/* ---- portal service ---------------------------------------------------- */

/* `config_json`: {ontology, store, bind?, port?, threshold?, languages?,
 * labelsOnly?, strictLabelWeights?, foldDiacritics?, staticDir?}. Relative
 * paths resolve against `base_dir` (NULL = working directory). */
OW_API ow_status ow_service_create(const char* config_json, const char* base_dir,
                                   ow_service** out);
OW_API ow_status ow_service_create_from_file(const char* config_path, ow_service** out);
OW_API void ow_service_free(ow_service* service);

/* Blocks until ow_service_stop is called from another thread. */
OW_API ow_status ow_service_run(ow_service* service);
/* Starts serving on a background thread; *port receives the bound port
 * (useful with port 0). */
OW_API ow_status ow_service_start(ow_service* service, int* port);
OW_API ow_status ow_service_stop(ow_service* service);

/* Dispatches one request without the network. `body` and `query` may be
 * NULL; `query` is a URL query string without '?'. */
OW_API ow_status ow_service_handle(ow_service* service, const char* method, const char* path,
                                   const char* query, const char* body, int* http_status,
                                   char** response_body);

#ifdef __cplusplus
}
#endif

#endif /* ONTOWIND_H */
