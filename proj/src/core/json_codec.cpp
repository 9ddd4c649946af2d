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

#include "core/json_codec.hpp"

#include "core/error.hpp"
#include "core/io.hpp"

namespace ontowind {

using nlohmann::json;

namespace {

void dump_into(const json& v, int indent, int depth, std::string& out) {
  auto newline = [&](int d) {
    if (indent < 0) return;
    out += '\n';
    out.append(static_cast<std::size_t>(indent * d), ' ');
  };
  switch (v.type()) {
    case json::value_t::object: {
      if (v.empty()) {
        out += "{}";
        return;
      }
      out += '{';
      bool first = true;
      for (auto it = v.begin(); it != v.end(); ++it) {
        if (!first) out += ',';
        first = false;
        newline(depth + 1);
        out += json(it.key()).dump();
        out += indent < 0 ? ":" : ": ";
        dump_into(it.value(), indent, depth + 1, out);
      }
      newline(depth);
      out += '}';
      return;
    }
    case json::value_t::array: {
      if (v.empty()) {
        out += "[]";
        return;
      }
      out += '[';
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ',';
        newline(depth + 1);
        dump_into(v[i], indent, depth + 1, out);
      }
      newline(depth);
      out += ']';
      return;
    }
    case json::value_t::number_float:
      out += format_weight(v.get<double>());
      return;
    default:
      out += v.dump();
  }
}

std::string optional_string(const json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end() || it->is_null()) return {};
  if (!it->is_string()) fail(ErrorCode::Schema, std::string("'") + key + "' must be a string");
  return it->get<std::string>();
}

}  // namespace

std::string dump_canonical(const json& value, int indent) {
  std::string out;
  dump_into(value, indent, 0, out);
  return out;
}

json to_json(const LexicalEntry& e) {
  return {{"term", e.term},
          {"language", e.language},
          {"kind", std::string(entry_kind_name(e.kind))},
          {"weight", e.weight}};
}

json to_json(const Concept& c) {
  json lex = json::array();
  for (const auto& e : c.lexicon) lex.push_back(to_json(e));
  return {{"id", c.id},
          {"parent", c.parent ? json(*c.parent) : json(nullptr)},
          {"label", c.label},
          {"lexicon", std::move(lex)}};
}

json to_json(const Instance& i) {
  json attrs = json::object();
  for (const auto& [k, v] : i.attributes) attrs[k] = v;
  return {{"id", i.id}, {"conceptId", i.concept_id}, {"attributes", std::move(attrs)}};
}

json to_json(const ConceptTree& tree) {
  json j = to_json(tree.node);
  json kids = json::array();
  for (const auto& c : tree.children) kids.push_back(to_json(c));
  j["children"] = std::move(kids);
  return j;
}

json to_json(const Violation& v) {
  return {{"subject", v.subject}, {"rule", std::string(rule_name(v.rule))}, {"message", v.message}};
}

json to_json(const std::vector<Violation>& violations) {
  json arr = json::array();
  for (const auto& v : violations) arr.push_back(to_json(v));
  return arr;
}

json to_json(const ConceptMatch& m) {
  return {{"conceptId", m.concept_id},
          {"term", m.entry.term},
          {"language", m.entry.language},
          {"kind", std::string(entry_kind_name(m.entry.kind))},
          {"weight", m.entry.weight},
          {"start", m.start},
          {"end", m.end}};
}

json to_json(const CategorizationResult& r) {
  json concepts = json::array();
  for (const auto& c : r.matched_concepts)
    concepts.push_back({{"conceptId", c.concept_id},
                        {"contributedWeight", c.contributed_weight},
                        {"matchCount", c.match_count}});
  json matches = json::array();
  for (const auto& m : r.matches) matches.push_back(to_json(m));
  return {{"documentId", r.document_id}, {"matchedConcepts", std::move(concepts)},
          {"score", r.score},            {"threshold", r.threshold},
          {"relevant", r.relevant},      {"matches", std::move(matches)}};
}

CategorizationResult categorization_result_from_json(const json& j) {
  CategorizationResult r;
  r.document_id = j.at("documentId").get<std::string>();
  for (const auto& c : j.at("matchedConcepts"))
    r.matched_concepts.push_back({c.at("conceptId").get<std::string>(),
                                  c.at("contributedWeight").get<double>(),
                                  c.at("matchCount").get<std::size_t>()});
  r.score = j.at("score").get<double>();
  r.threshold = j.at("threshold").get<double>();
  r.relevant = j.at("relevant").get<bool>();
  if (auto it = j.find("matches"); it != j.end()) {
    for (const auto& m : *it) {
      ConceptMatch cm;
      cm.concept_id = m.at("conceptId").get<std::string>();
      cm.entry.term = m.at("term").get<std::string>();
      cm.entry.language = m.at("language").get<std::string>();
      auto kind = parse_entry_kind(m.at("kind").get<std::string>());
      if (!kind) fail(ErrorCode::Schema, "unknown entry kind");
      cm.entry.kind = *kind;
      cm.entry.weight = m.at("weight").get<double>();
      cm.start = m.at("start").get<std::size_t>();
      cm.end = m.at("end").get<std::size_t>();
      r.matches.push_back(std::move(cm));
    }
  }
  return r;
}

Document document_from_json(const json& j) {
  if (!j.is_object()) fail(ErrorCode::Schema, "document must be a JSON object");
  Document d;
  d.id = optional_string(j, "id");
  d.title = optional_string(j, "title");
  d.abstract_text = optional_string(j, "abstractText");
  if (auto it = j.find("keywords"); it != j.end() && !it->is_null()) {
    if (!it->is_array()) fail(ErrorCode::Schema, "'keywords' must be an array of strings");
    for (const auto& k : *it) {
      if (!k.is_string()) fail(ErrorCode::Schema, "'keywords' must be an array of strings");
      d.keywords.push_back(k.get<std::string>());
    }
  }
  if (j.contains("body") && !j["body"].is_null()) d.body = optional_string(j, "body");
  if (j.contains("sourceUrl") && !j["sourceUrl"].is_null())
    d.source_url = optional_string(j, "sourceUrl");
  return d;
}

json to_json(const Document& d) {
  json j = {{"id", d.id}, {"title", d.title}, {"abstractText", d.abstract_text},
            {"keywords", d.keywords}};
  if (d.body) j["body"] = *d.body;
  if (d.source_url) j["sourceUrl"] = *d.source_url;
  return j;
}

json to_json(const NgramStats& s) {
  std::string joined;
  for (std::size_t i = 0; i < s.ngram.size(); ++i) joined += (i ? " " : "") + s.ngram[i];
  return {{"ngram", joined},
          {"tokens", s.ngram},
          {"frequency", s.frequency},
          {"documentFrequency", s.document_frequency}};
}

json to_json(const ScaffoldEntry& e) {
  return {{"candidateTerm", e.candidate_term},
          {"suggestedConceptId", e.suggested_concept_id},
          {"frequency", e.frequency},
          {"defaultWeight", e.default_weight}};
}

json to_json(const ConfusionMatrix& cm) {
  json j = {{"tp", cm.tp}, {"fn", cm.fn}, {"tn", cm.tn}, {"fp", cm.fp}, {"total", cm.total()}};
  if (cm.total() > 0) {
    double acc = accuracy(cm);
    j["accuracy"] = acc;
    j["accuracyText"] = format_accuracy(acc);
    j["accuracyPercent"] = format_percent(acc);
  }
  auto opt = [](std::optional<double> v) { return v ? json(*v) : json(nullptr); };
  j["precision"] = opt(precision(cm));
  j["recall"] = opt(recall(cm));
  j["f1"] = opt(f1(cm));
  return j;
}

json to_json(const ComparisonReport& report) {
  auto concepts = [](const CategorizationResult& r) {
    json arr = json::array();
    for (const auto& c : r.matched_concepts) arr.push_back(c.concept_id);
    return arr;
  };
  json dis = json::array();
  for (const auto& d : report.disagreements)
    dis.push_back({{"documentId", d.document_id},
                   {"label", d.label},
                   {"a", {{"relevant", d.a.relevant}, {"score", d.a.score},
                          {"matchedConcepts", concepts(d.a)}}},
                   {"b", {{"relevant", d.b.relevant}, {"score", d.b.score},
                          {"matchedConcepts", concepts(d.b)}}}});
  return {{"a", to_json(report.a)}, {"b", to_json(report.b)}, {"disagreements", std::move(dis)}};
}

}  // namespace ontowind
