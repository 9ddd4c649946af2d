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

// ontowind command-line tool. JSON to stdout, diagnostics to stderr.
// Exit codes: 0 ok, 1 validation or evaluation failure, 2 usage, 3 I/O.

#include <CLI11.hpp>
#include <json.hpp>
#include <ontowind/ontowind.h>

#include <signal.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

struct Failure {
  int exit_code;
};

int exit_code_for(ow_status s) {
  switch (s) {
    case OW_OK:
      return kExitOk;
    case OW_ERR_IO:
      return kExitIo;
    case OW_ERR_INVALID_ARGUMENT:
      return kExitUsage;
    default:
      return kExitFailure;
  }
}

void check(ow_status s) {
  if (s == OW_OK) return;
  std::fprintf(stderr, "ontowind: %s: %s\n", ow_status_name(s), ow_last_error());
  throw Failure{exit_code_for(s)};
}

// Owns a string returned by the library.
struct OwString {
  char* p = nullptr;
  ~OwString() { ow_string_free(p); }
  std::string str() const { return p ? p : ""; }
  json parse() const { return json::parse(str()); }
};

struct OntologyDeleter {
  void operator()(ow_ontology* o) const { ow_ontology_free(o); }
};
struct LexiconDeleter {
  void operator()(ow_lexicon* l) const { ow_lexicon_free(l); }
};
struct StoreDeleter {
  void operator()(ow_store* s) const { ow_store_free(s); }
};
struct ServiceDeleter {
  void operator()(ow_service* s) const { ow_service_free(s); }
};
using Ontology = std::unique_ptr<ow_ontology, OntologyDeleter>;
using Lexicon = std::unique_ptr<ow_lexicon, LexiconDeleter>;
using Store = std::unique_ptr<ow_store, StoreDeleter>;
using Service = std::unique_ptr<ow_service, ServiceDeleter>;

struct MatchFlags {
  std::string languages = "EN";
  bool labels_only = false;
  bool fold_diacritics = false;
  double threshold = 1.0;
  bool strict_label_weights = false;

  void add_to(CLI::App* cmd) {
    cmd->add_option("--threshold", threshold, "Relevance threshold")->capture_default_str();
    cmd->add_option("--languages", languages, "Comma-separated lexicon languages")
        ->capture_default_str();
    cmd->add_flag("--labels-only", labels_only, "Match primary labels only");
    cmd->add_flag("--fold-diacritics", fold_diacritics, "Fold diacritics when matching");
    cmd->add_flag("--strict-label-weights", strict_label_weights,
                  "Weigh every match by its concept's label weight");
  }

  ow_categorize_options categorize() const { return {threshold, strict_label_weights ? 1 : 0}; }
};

Ontology load(const std::string& path, bool validate = true) {
  ow_ontology* o = nullptr;
  check(ow_ontology_load_file(path.c_str(), validate ? 1 : 0, &o));
  return Ontology(o);
}

Lexicon lexicon_for(const ow_ontology* o, const MatchFlags& f) {
  ow_lexicon_options opts{f.languages.c_str(), f.labels_only ? 1 : 0, f.fold_diacritics ? 1 : 0};
  ow_lexicon* l = nullptr;
  check(ow_lexicon_build(o, &opts, &l));
  return Lexicon(l);
}

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path, std::ios::binary);
  if (!in || fs::is_directory(path)) {
    std::fprintf(stderr, "ontowind: IoError: cannot read '%s'\n", path.c_str());
    throw Failure{kExitIo};
  }
  return {std::istreambuf_iterator<char>(in), {}};
}

void print_json(const json& j) { std::cout << j.dump(2) << "\n"; }

void print_raw(const OwString& s) { std::cout << s.str(); }

std::string fixed(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

std::string concepts_list(const json& matched) {
  std::string out;
  for (const auto& c : matched) {
    if (!out.empty()) out += ", ";
    out += c.is_string() ? c.get<std::string>()
                         : c["conceptId"].get<std::string>() + " (" +
                               fixed(c["contributedWeight"].get<double>(), 3) + ")";
  }
  return out.empty() ? "-" : out;
}

void pretty_result(const json& r) {
  std::cout << (r["documentId"].get<std::string>().empty() ? std::string("(document)")
                                                           : r["documentId"].get<std::string>())
            << ": " << (r["relevant"].get<bool>() ? "relevant" : "irrelevant")
            << "  score " << fixed(r["score"].get<double>(), 3) << " / threshold "
            << fixed(r["threshold"].get<double>(), 3) << "\n"
            << "  concepts: " << concepts_list(r["matchedConcepts"]) << "\n";
}

void pretty_matrix(const std::string& name, const json& cm) {
  std::printf("%-10s %4llu %4llu %4llu %4llu %5llu  %s\n", name.c_str(),
              cm["tp"].get<unsigned long long>(), cm["fn"].get<unsigned long long>(),
              cm["tn"].get<unsigned long long>(), cm["fp"].get<unsigned long long>(),
              cm["total"].get<unsigned long long>(),
              cm.contains("accuracyPercent") ? cm["accuracyPercent"].get<std::string>().c_str()
                                             : "n/a");
}

void pretty_matrix_header() {
  std::printf("%-10s %4s %4s %4s %4s %5s  %s\n", "", "TP", "FN", "TN", "FP", "total", "accuracy");
}

// --- subcommands ---------------------------------------------------------

int run_validate(const std::string& path, bool pretty) {
  auto o = load(path, false);
  OwString violations;
  size_t count = 0, concepts = 0, roots = 0, instances = 0;
  check(ow_ontology_validate(o.get(), &violations.p, &count));
  check(ow_ontology_counts(o.get(), &concepts, &roots, &instances));
  std::string summary = std::to_string(count) + (count == 1 ? " violation" : " violations");
  if (pretty) {
    std::cout << path << ": " << summary << " (" << concepts << " concepts, " << roots
              << " roots, " << instances << " instances)\n";
    for (const auto& v : violations.parse())
      std::cout << "  " << v["subject"].get<std::string>() << ": " << v["rule"].get<std::string>()
                << ": " << v["message"].get<std::string>() << "\n";
  } else {
    print_json({{"ontology", path},
                {"summary", summary},
                {"violationCount", count},
                {"violations", violations.parse()},
                {"concepts", concepts},
                {"roots", roots},
                {"instances", instances}});
  }
  return count == 0 ? kExitOk : kExitFailure;
}

ow_format parse_format(const std::string& name) {
  if (name == "auto") return OW_FORMAT_AUTO;
  if (name == "canonical" || name == "json") return OW_FORMAT_CANONICAL;
  return OW_FORMAT_OWL;
}

int run_convert(const std::string& in, const std::string& out, const std::string& format,
                bool pretty) {
  auto o = load(in);
  check(ow_ontology_save_file(o.get(), out.c_str(), parse_format(format)));
  size_t concepts = 0, instances = 0;
  check(ow_ontology_counts(o.get(), &concepts, nullptr, &instances));
  if (pretty)
    std::cout << "wrote " << out << " (" << concepts << " concepts, " << instances
              << " instances)\n";
  else
    print_json({{"input", in}, {"output", out}, {"concepts", concepts}, {"instances", instances}});
  return kExitOk;
}

int run_categorize(const std::string& ontology, const std::string& input, const MatchFlags& flags,
                   bool pretty) {
  auto o = load(ontology);
  auto lex = lexicon_for(o.get(), flags);
  auto opts = flags.categorize();
  OwString out;
  const bool corpus = input != "-" && (fs::is_directory(input) || fs::path(input).extension() == ".jsonl");
  if (corpus) {
    check(ow_categorize_corpus(lex.get(), input.c_str(), &opts, &out.p));
  } else {
    std::string text = read_input(input);
    auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') {
      check(ow_categorize(lex.get(), text.c_str(), &opts, &out.p));
    } else {
      std::string id = input == "-" ? "" : fs::path(input).stem().string();
      check(ow_categorize_text(lex.get(), id.c_str(), text.c_str(), &opts, &out.p));
    }
  }
  if (!pretty) {
    print_raw(out);
  } else if (corpus) {
    for (const auto& r : out.parse()) pretty_result(r);
  } else {
    pretty_result(out.parse());
  }
  return kExitOk;
}

struct MineFlags {
  std::string n = "1-3";
  size_t min_freq = 5;
  size_t top_k = 50;
  std::string stopwords;
  std::string weight_rule = "reciprocal";
  std::string language = "EN";
  std::string scaffold_out;
};

void parse_range(const std::string& text, size_t& lo, size_t& hi) {
  try {
    auto dash = text.find('-');
    size_t used = 0;
    lo = std::stoul(text.substr(0, dash), &used);
    if (used != text.substr(0, dash).size()) throw std::invalid_argument(text);
    hi = dash == std::string::npos ? lo : std::stoul(text.substr(dash + 1), &used);
    if (dash != std::string::npos && used != text.size() - dash - 1)
      throw std::invalid_argument(text);
  } catch (const std::exception&) {
    std::fprintf(stderr, "ontowind: --n expects N or MIN-MAX, got '%s'\n", text.c_str());
    throw Failure{kExitUsage};
  }
}

int run_mine(const std::string& corpus, const MineFlags& f, bool pretty) {
  ow_mine_options opts;
  ow_mine_options_init(&opts);
  parse_range(f.n, opts.n_min, opts.n_max);
  opts.min_freq = f.min_freq;
  opts.top_k = f.top_k;
  if (!f.stopwords.empty()) opts.stopwords_path = f.stopwords.c_str();
  opts.language = f.language.c_str();
  if (f.weight_rule.rfind("uniform", 0) == 0) {
    opts.uniform_weights = 1;
    auto colon = f.weight_rule.find(':');
    try {
      opts.uniform_weight = colon == std::string::npos ? 1.0 : std::stod(f.weight_rule.substr(colon + 1));
    } catch (const std::exception&) {
      std::fprintf(stderr, "ontowind: --weight-rule expects uniform:W\n");
      throw Failure{kExitUsage};
    }
  } else if (f.weight_rule != "reciprocal") {
    std::fprintf(stderr, "ontowind: --weight-rule must be 'reciprocal' or 'uniform:W'\n");
    throw Failure{kExitUsage};
  }
  OwString out;
  check(ow_mine(corpus.c_str(), &opts, &out.p));
  json j = out.parse();
  if (!f.scaffold_out.empty()) {
    std::ofstream os(f.scaffold_out, std::ios::binary);
    os << j["ontology"].dump(2) << "\n";
    if (!os) {
      std::fprintf(stderr, "ontowind: IoError: cannot write '%s'\n", f.scaffold_out.c_str());
      throw Failure{kExitIo};
    }
  }
  if (!pretty) {
    print_raw(out);
    return kExitOk;
  }
  std::printf("%-5s %-40s %-36s %6s %7s\n", "rank", "candidate", "concept", "freq", "weight");
  size_t rank = 0;
  for (const auto& e : j["scaffold"])
    std::printf("%-5zu %-40s %-36s %6llu %7.4f\n", ++rank,
                e["candidateTerm"].get<std::string>().c_str(),
                e["suggestedConceptId"].get<std::string>().c_str(),
                e["frequency"].get<unsigned long long>(), e["defaultWeight"].get<double>());
  return kExitOk;
}

int run_eval(const std::string& ontology, const std::string& labeled, const MatchFlags& flags,
             bool pretty) {
  auto o = load(ontology);
  auto lex = lexicon_for(o.get(), flags);
  auto opts = flags.categorize();
  OwString out;
  check(ow_evaluate(lex.get(), labeled.c_str(), &opts, &out.p));
  if (!pretty) {
    print_raw(out);
    return kExitOk;
  }
  pretty_matrix_header();
  pretty_matrix(fs::path(ontology).stem().string(), out.parse());
  return kExitOk;
}

int run_compare(const std::string& a, const std::string& b, const std::string& labeled,
                const MatchFlags& flags, bool pretty) {
  auto oa = load(a), ob = load(b);
  auto la = lexicon_for(oa.get(), flags), lb = lexicon_for(ob.get(), flags);
  auto opts = flags.categorize();
  OwString out;
  check(ow_compare(la.get(), lb.get(), labeled.c_str(), &opts, &out.p));
  if (!pretty) {
    print_raw(out);
    return kExitOk;
  }
  json j = out.parse();
  pretty_matrix_header();
  pretty_matrix("A", j["a"]);
  pretty_matrix("B", j["b"]);
  std::cout << j["disagreements"].size() << " disagreements\n";
  for (const auto& d : j["disagreements"])
    std::cout << "  " << d["documentId"].get<std::string>() << " label="
              << (d["label"].get<bool>() ? "relevant" : "irrelevant")
              << " A=" << (d["a"]["relevant"].get<bool>() ? "relevant" : "irrelevant") << " ["
              << concepts_list(d["a"]["matchedConcepts"]) << "]"
              << " B=" << (d["b"]["relevant"].get<bool>() ? "relevant" : "irrelevant") << " ["
              << concepts_list(d["b"]["matchedConcepts"]) << "]\n";
  return kExitOk;
}

int run_ingest(const std::string& ontology, const std::string& corpus, const std::string& store,
               const MatchFlags& flags, bool pretty) {
  auto o = load(ontology);
  auto lex = lexicon_for(o.get(), flags);
  ow_store* s = nullptr;
  check(ow_store_open(store.c_str(), &s));
  Store owned(s);
  auto opts = flags.categorize();
  OwString out;
  check(ow_ingest(lex.get(), corpus.c_str(), s, &opts, &out.p));
  if (!pretty) {
    print_raw(out);
    return kExitOk;
  }
  json r = out.parse();
  std::cout << "scanned " << r["scanned"] << ", relevant " << r["relevant"] << ", stored "
            << r["stored"] << ", duplicates " << r["duplicates"] << "\n";
  return kExitOk;
}

int run_generate(const std::string& ontology, const std::string& out, size_t documents,
                 uint64_t seed, const MatchFlags& flags, bool pretty) {
  auto o = load(ontology);
  auto lex = lexicon_for(o.get(), flags);
  check(ow_generate_corpus(lex.get(), documents, seed, out.c_str()));
  if (pretty)
    std::cout << "wrote " << documents << " documents to " << out << "\n";
  else
    print_json({{"output", out}, {"documents", documents}, {"seed", seed}});
  return kExitOk;
}

struct ServeFlags {
  std::string config;
  std::string ontology;
  std::string store;
  std::string bind;
  std::optional<int> port;
  std::optional<double> threshold;
  std::string languages;
  std::string static_dir;
};

int run_serve(const ServeFlags& f) {
  json config = json::object();
  std::string base_dir;
  if (!f.config.empty()) {
    try {
      config = json::parse(read_input(f.config));
    } catch (const json::parse_error& e) {
      std::fprintf(stderr, "ontowind: JsonError: %s: %s\n", f.config.c_str(), e.what());
      return kExitFailure;
    }
    base_dir = fs::path(f.config).parent_path().string();
  }
  // Flags are relative to the working directory, not the config file.
  auto absolute = [](const std::string& p) {
    return p.empty() || p[0] == '@' ? p : fs::absolute(p).string();
  };
  if (!f.ontology.empty()) config["ontology"] = absolute(f.ontology);
  if (!f.store.empty()) config["store"] = absolute(f.store);
  if (!f.bind.empty()) config["bind"] = f.bind;
  if (f.port) config["port"] = *f.port;
  if (f.threshold) config["threshold"] = *f.threshold;
  if (!f.static_dir.empty()) config["staticDir"] = absolute(f.static_dir);
  if (!f.languages.empty()) {
    json langs = json::array();
    std::stringstream ss(f.languages);
    for (std::string item; std::getline(ss, item, ',');)
      if (!item.empty()) langs.push_back(item);
    config["languages"] = langs;
  }

  // Block the stop signals before the server threads start so they inherit
  // the mask and sigwait sees every delivery.
  sigset_t stop_signals;
  sigemptyset(&stop_signals);
  sigaddset(&stop_signals, SIGINT);
  sigaddset(&stop_signals, SIGTERM);
  pthread_sigmask(SIG_BLOCK, &stop_signals, nullptr);

  ow_service* svc = nullptr;
  check(ow_service_create(config.dump().c_str(), base_dir.empty() ? nullptr : base_dir.c_str(),
                          &svc));
  Service owned(svc);
  int port = 0;
  check(ow_service_start(svc, &port));
  std::fprintf(stderr, "ontowind: serving on port %d\n", port);
  int sig = 0;
  sigwait(&stop_signals, &sig);
  check(ow_service_stop(svc));
  std::fprintf(stderr, "ontowind: stopped\n");
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ontowind: wind-energy ontology tools"};
  app.require_subcommand(1);
  app.fallthrough();
  bool pretty = false;
  app.add_flag("--pretty", pretty, "Human-readable output");
  app.set_version_flag("--version", std::string(ow_version()));

  std::string a, b, c;
  MatchFlags match;

  auto* validate = app.add_subcommand("validate", "Check an ontology against the rules");
  std::string validate_path = "@default";
  validate->add_option("ontology", validate_path, "Ontology (canonical JSON or OWL); @seed loads "
                       "the built-in seed; default: $ONTOWIND_ONTOLOGY or @seed");

  auto* convert = app.add_subcommand("convert", "Convert between OWL and canonical JSON");
  std::string format = "auto";
  convert->add_option("input", a, "Input ontology")->required();
  convert->add_option("output", b, "Output path (.owl/.rdf/.xml selects OWL)")->required();
  convert->add_option("--format", format, "auto | canonical | owl")
      ->check(CLI::IsMember({"auto", "canonical", "json", "owl"}))
      ->capture_default_str();

  auto* categorize = app.add_subcommand("categorize", "Categorize a document or corpus");
  categorize->add_option("ontology", a, "Ontology")->required();
  categorize->add_option("document", b, "Document (text, JSON, - for stdin) or corpus")
      ->required();
  match.add_to(categorize);

  auto* mine = app.add_subcommand("mine", "Mine n-grams and draft an ontology scaffold");
  MineFlags mine_flags;
  mine->add_option("corpus", a, "Directory of text files or JSON lines")->required();
  mine->add_option("--n", mine_flags.n, "N-gram length N or range MIN-MAX (max 5)")
      ->capture_default_str();
  mine->add_option("--min-freq", mine_flags.min_freq, "Minimum frequency")->capture_default_str();
  mine->add_option("--top-k", mine_flags.top_k, "Scaffold size")->capture_default_str();
  mine->add_option("--stopwords", mine_flags.stopwords, "Stopword file, one per line");
  mine->add_option("--weight-rule", mine_flags.weight_rule, "reciprocal | uniform:W")
      ->capture_default_str();
  mine->add_option("--language", mine_flags.language, "Scaffold label language")
      ->capture_default_str();
  mine->add_option("--scaffold-out", mine_flags.scaffold_out, "Write the draft ontology here");

  auto* eval = app.add_subcommand("eval", "Evaluate against a labeled corpus");
  eval->add_option("ontology", a, "Ontology")->required();
  eval->add_option("labeled", b, "Labeled corpus (JSON lines with 'label')")->required();
  match.add_to(eval);

  auto* compare = app.add_subcommand("compare", "Compare two ontologies on a labeled corpus");
  compare->add_option("ontologyA", a, "First ontology")->required();
  compare->add_option("ontologyB", b, "Second ontology")->required();
  compare->add_option("labeled", c, "Labeled corpus")->required();
  match.add_to(compare);

  auto* ingest = app.add_subcommand("ingest", "Store the relevant documents of a corpus");
  ingest->add_option("ontology", a, "Ontology")->required();
  ingest->add_option("corpus", b, "Corpus")->required();
  ingest->add_option("store", c, "Article store (JSON lines)")->required();
  match.add_to(ingest);

  auto* generate = app.add_subcommand("generate", "Write a synthetic labeled corpus");
  size_t documents = 200;
  uint64_t seed = 1;
  generate->add_option("ontology", a, "Ontology")->required();
  generate->add_option("output", b, "Output JSON-lines file")->required();
  generate->add_option("--documents", documents, "Document count")->capture_default_str();
  generate->add_option("--seed", seed, "Random seed")->capture_default_str();
  match.add_to(generate);

  auto* serve = app.add_subcommand("serve", "Run the portal HTTP service");
  ServeFlags serve_flags;
  serve->add_option("config", serve_flags.config, "Service config (JSON)");
  serve->add_option("--ontology", serve_flags.ontology, "Ontology path");
  serve->add_option("--store", serve_flags.store, "Article store path");
  serve->add_option("--bind", serve_flags.bind, "Bind address (default 127.0.0.1)");
  serve->add_option("--port", serve_flags.port, "Port (default 8080, 0 = any)");
  serve->add_option("--threshold", serve_flags.threshold, "Relevance threshold");
  serve->add_option("--languages", serve_flags.languages, "Comma-separated languages");
  serve->add_option("--static-dir", serve_flags.static_dir, "Serve UI files from here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    std::cout << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    std::cout << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    std::cout << ow_version() << "\n";
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    std::cerr << "ontowind: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  try {
    if (*validate) return run_validate(validate_path, pretty);
    if (*convert) return run_convert(a, b, format, pretty);
    if (*categorize) return run_categorize(a, b, match, pretty);
    if (*mine) return run_mine(a, mine_flags, pretty);
    if (*eval) return run_eval(a, b, match, pretty);
    if (*compare) return run_compare(a, b, c, match, pretty);
    if (*ingest) return run_ingest(a, b, c, match, pretty);
    if (*generate) return run_generate(a, b, documents, seed, match, pretty);
    if (*serve) return run_serve(serve_flags);
  } catch (const Failure& f) {
    return f.exit_code;
  }
  std::cerr << app.help();
  return kExitUsage;
}
