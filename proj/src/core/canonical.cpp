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

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iterator>
#include <sstream>
#include <unordered_set>

#include "core/error.hpp"
#include "core/io.hpp"
#include "core/json_codec.hpp"

namespace ontowind {

using nlohmann::json;

std::string format_weight(double value) {
  if (!std::isfinite(value)) fail(ErrorCode::Validation, "non-finite weight");
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", value);
  std::string s(buf);
  if (s.find_first_not_of("-0.") == std::string::npos) return "0.0";  // also folds -0
  while (s.back() == '0' && s[s.size() - 2] != '.') s.pop_back();
  return s;
}

namespace {

const json& require(const json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) fail(ErrorCode::Schema, where + ": missing required field '" + key + "'");
  return *it;
}

std::string require_string(const json& obj, const char* key, const std::string& where) {
  const json& v = require(obj, key, where);
  if (!v.is_string()) fail(ErrorCode::Schema, where + ": field '" + key + "' must be a string");
  return v.get<std::string>();
}

LexicalEntry parse_entry(const json& j, const std::string& where) {
  if (!j.is_object()) fail(ErrorCode::Schema, where + ": lexicon entry must be an object");
  LexicalEntry e;
  e.term = require_string(j, "term", where);
  e.language = require_string(j, "language", where);
  auto kind = parse_entry_kind(require_string(j, "kind", where));
  if (!kind) fail(ErrorCode::Schema, where + ": kind must be PrimaryLabel or Synonym");
  e.kind = *kind;
  const json& w = require(j, "weight", where);
  if (!w.is_number()) fail(ErrorCode::Schema, where + ": weight must be a number");
  e.weight = w.get<double>();
  return e;
}

Concept parse_concept(const json& j, std::size_t index) {
  std::string where = "concepts[" + std::to_string(index) + "]";
  if (!j.is_object()) fail(ErrorCode::Schema, where + " must be an object");
  Concept c;
  c.id = require_string(j, "id", where);
  where += " (" + c.id + ")";
  c.label = require_string(j, "label", where);
  if (auto it = j.find("parent"); it != j.end() && !it->is_null()) {
    if (!it->is_string()) fail(ErrorCode::Schema, where + ": parent must be a string or null");
    c.parent = it->get<std::string>();
  }
  if (auto it = j.find("lexicon"); it != j.end()) {
    if (!it->is_array()) fail(ErrorCode::Schema, where + ": lexicon must be an array");
    for (const auto& e : *it) c.lexicon.push_back(parse_entry(e, where));
  }
  return c;
}

Instance parse_instance(const json& j, std::size_t index) {
  std::string where = "instances[" + std::to_string(index) + "]";
  if (!j.is_object()) fail(ErrorCode::Schema, where + " must be an object");
  Instance inst;
  inst.id = require_string(j, "id", where);
  inst.concept_id = require_string(j, "conceptId", where);
  if (auto it = j.find("attributes"); it != j.end()) {
    if (!it->is_object()) fail(ErrorCode::Schema, where + ": attributes must be an object");
    for (const auto& [k, v] : it->items()) {
      if (!v.is_string())
        fail(ErrorCode::Schema, where + ": attribute '" + k + "' must be a string");
      inst.attributes.emplace(k, v.get<std::string>());
    }
  }
  return inst;
}

// Pre-order from the roots, children by id. Concepts unreachable from a root
// (only possible in invalid ontologies) trail in declaration order.
std::vector<const Concept*> canonical_concept_order(const Ontology& o) {
  std::vector<const Concept*> out;
  std::unordered_set<std::string> emitted;
  std::vector<const Concept*> stack;
  for (auto it = o.roots().rbegin(); it != o.roots().rend(); ++it)
    stack.push_back(o.find_concept(*it));
  while (!stack.empty()) {
    const Concept* c = stack.back();
    stack.pop_back();
    if (!c || !emitted.insert(c->id).second) continue;
    out.push_back(c);
    auto kids = o.children(c->id);
    for (auto it = kids.rbegin(); it != kids.rend(); ++it) stack.push_back(*it);
  }
  for (const auto& c : o.concepts())
    if (emitted.insert(c.id).second) out.push_back(&c);
  return out;
}

}  // namespace

std::vector<const Concept*> concepts_in_canonical_order(const Ontology& ontology) {
  return canonical_concept_order(ontology);
}

Ontology parse_canonical(std::string_view bytes, ParseOptions options) {
  json doc;
  try {
    doc = json::parse(bytes.begin(), bytes.end());
  } catch (const json::parse_error& e) {
    fail(ErrorCode::Json, e.what());
  }
  if (!doc.is_object()) fail(ErrorCode::Schema, "document must be a JSON object");
  const json& version = require(doc, "formatVersion", "document");
  if (!version.is_string() || version.get<std::string>() != kCanonicalFormatVersion)
    fail(ErrorCode::Schema, "unsupported formatVersion " + version.dump());

  const json& concepts = require(doc, "concepts", "document");
  if (!concepts.is_array()) fail(ErrorCode::Schema, "concepts must be an array");
  std::vector<Concept> cs;
  for (std::size_t i = 0; i < concepts.size(); ++i) cs.push_back(parse_concept(concepts[i], i));

  std::vector<Instance> is;
  if (auto it = doc.find("instances"); it != doc.end()) {
    if (!it->is_array()) fail(ErrorCode::Schema, "instances must be an array");
    for (std::size_t i = 0; i < it->size(); ++i) is.push_back(parse_instance((*it)[i], i));
  }

  Ontology out(std::move(cs), std::move(is));
  if (options.validate) ensure_valid(out);
  return out;
}

std::string serialize_canonical(const Ontology& ontology) {
  ensure_valid(ontology);
  json concepts = json::array();
  for (const Concept* c : canonical_concept_order(ontology)) concepts.push_back(to_json(*c));

  std::vector<const Instance*> insts;
  for (const auto& i : ontology.instances()) insts.push_back(&i);
  std::sort(insts.begin(), insts.end(),
            [](const Instance* a, const Instance* b) { return a->id < b->id; });
  json instances = json::array();
  for (const Instance* i : insts) instances.push_back(to_json(*i));

  json doc = {{"formatVersion", std::string(kCanonicalFormatVersion)},
              {"concepts", std::move(concepts)},
              {"instances", std::move(instances)}};
  return dump_canonical(doc) + "\n";
}

void ensure_valid(const Ontology& ontology) {
  auto violations = validate(ontology);
  if (violations.empty()) return;
  std::ostringstream msg;
  msg << violations.size() << " violation(s):";
  for (std::size_t i = 0; i < violations.size() && i < 5; ++i)
    msg << " [" << rule_name(violations[i].rule) << " " << violations[i].subject << ": "
        << violations[i].message << "]";
  if (violations.size() > 5) msg << " ...";
  fail(ErrorCode::Validation, msg.str());
}

Format detect_format(std::string_view bytes) noexcept {
  std::size_t pos = 0;
  if (bytes.substr(0, 3) == "\xEF\xBB\xBF") pos = 3;
  pos = bytes.find_first_not_of(" \t\r\n", pos);
  return pos != std::string_view::npos && bytes[pos] == '<' ? Format::Owl : Format::Canonical;
}

Format format_for_path(const std::filesystem::path& path) noexcept {
  auto ext = path.extension().string();
  for (auto& ch : ext) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  return ext == ".owl" || ext == ".rdf" || ext == ".xml" ? Format::Owl : Format::Canonical;
}

Ontology parse_ontology(std::string_view bytes, ParseOptions options) {
  return detect_format(bytes) == Format::Owl ? parse_owl(bytes, options)
                                             : parse_canonical(bytes, options);
}

std::string serialize_ontology(const Ontology& ontology, Format format) {
  return format == Format::Owl ? serialize_owl(ontology) : serialize_canonical(ontology);
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::Io, "cannot read '" + path.string() + "'");
  std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (in.bad()) fail(ErrorCode::Io, "error reading '" + path.string() + "'");
  return bytes;
}

void write_file(const std::filesystem::path& path, std::string_view bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) fail(ErrorCode::Io, "cannot write '" + path.string() + "'");
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  out.flush();
  if (!out) fail(ErrorCode::Io, "error writing '" + path.string() + "'");
}

std::string resolve_ontology_path(std::string_view path) {
  if (path != kDefaultPath) return std::string(path);
  const char* env = std::getenv(kOntologyEnvVar);
  return env && *env ? std::string(env) : std::string(kSeedPath);
}

Ontology load_ontology_file(const std::string& requested, ParseOptions options) {
  const std::string path = resolve_ontology_path(requested);
  if (path == kSeedPath) return load_seed();
  if (std::filesystem::is_directory(path))
    fail(ErrorCode::Io, "'" + path + "' is a directory");
  return parse_ontology(read_file(path), options);
}

}  // namespace ontowind
