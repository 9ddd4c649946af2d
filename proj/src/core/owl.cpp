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

// Reader and writer for the subset of OWL 2 RDF/XML that the wind-energy
// ontology uses. Property matching is by local name, so files from different
// namespaces load as long as the property names agree.

#include <algorithm>
#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <map>
#include <set>
#include <sstream>

#include "core/error.hpp"
#include "core/io.hpp"
#include "core/json_codec.hpp"
#include "core/xml_dom.hpp"

namespace ontowind {

namespace {

constexpr std::string_view kRdf = "http://www.w3.org/1999/02/22-rdf-syntax-ns#";
constexpr std::string_view kRdfs = "http://www.w3.org/2000/01/rdf-schema#";
constexpr std::string_view kOwl = "http://www.w3.org/2002/07/owl#";
constexpr std::string_view kXsd = "http://www.w3.org/2001/XMLSchema#";

// Which lexical slot a property local name addresses.
enum class Slot { Label, LabelWeight, Synonyms, SynonymWeights };

struct LexicalProperty {
  Slot slot;
  std::string language;
};

bool is_upper2(std::string_view s) {
  return s.size() == 2 && s[0] >= 'A' && s[0] <= 'Z' && s[1] >= 'A' && s[1] <= 'Z';
}

// labelEN, labelTR, labelXX; membershipValueLabel (EN), membershipValueLabelXX;
// synonymSet (EN), synonymSetXX; membershipValueSynonymSet (EN), ...XX.
std::optional<LexicalProperty> lexical_property(std::string_view name) {
  auto suffix_lang = [&](std::string_view prefix,
                         bool bare_is_en) -> std::optional<std::string> {
    if (name.substr(0, prefix.size()) != prefix) return std::nullopt;
    auto rest = name.substr(prefix.size());
    if (rest.empty()) return bare_is_en ? std::optional<std::string>("EN") : std::nullopt;
    if (is_upper2(rest)) return std::string(rest);
    return std::nullopt;
  };
  // Longest prefixes first: "membershipValueLabel" must not eat
  // "membershipValueSynonymSet", and "label" alone is the concept name.
  if (auto l = suffix_lang("membershipValueSynonymSet", true)) return {{Slot::SynonymWeights, *l}};
  if (auto l = suffix_lang("membershipValueLabel", true)) return {{Slot::LabelWeight, *l}};
  if (auto l = suffix_lang("synonymSet", true)) return {{Slot::Synonyms, *l}};
  if (auto l = suffix_lang("label", false)) return {{Slot::Label, *l}};
  return std::nullopt;
}

std::string property_name(Slot slot, const std::string& language) {
  const bool en = language == "EN";
  switch (slot) {
    case Slot::Label: return "label" + language;
    case Slot::LabelWeight: return en ? "membershipValueLabel" : "membershipValueLabel" + language;
    case Slot::Synonyms: return en ? "synonymSet" : "synonymSet" + language;
    case Slot::SynonymWeights:
      return en ? "membershipValueSynonymSet" : "membershipValueSynonymSet" + language;
  }
  return {};
}

std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split_list(std::string_view value) {
  std::vector<std::string> out;
  std::string v = trim(value);
  if (v.empty()) return out;
  std::size_t start = 0;
  while (true) {
    auto cut = v.find(';', start);
    out.push_back(trim(std::string_view(v).substr(start, cut - start)));
    if (cut == std::string::npos) break;
    start = cut + 1;
  }
  if (out.size() > 1 && out.back().empty()) out.pop_back();  // tolerate trailing ';'
  return out;
}

double parse_number(const std::string& text, const std::string& where) {
  std::string t = trim(text);
  errno = 0;
  char* end = nullptr;
  double v = std::strtod(t.c_str(), &end);
  if (t.empty() || end != t.c_str() + t.size() || errno == ERANGE || !std::isfinite(v))
    fail(ErrorCode::Validation, where + ": '" + t + "' is not a number");
  return v;
}

std::string local_id(std::string_view iri) {
  auto cut = iri.find_last_of("#/");
  return std::string(cut == std::string_view::npos ? iri : iri.substr(cut + 1));
}

std::string qname_string(const xml::QName& q) {
  if (q.ns == kOwl) return "owl:" + q.local;
  if (q.ns == kRdf) return "rdf:" + q.local;
  if (q.ns == kRdfs) return "rdfs:" + q.local;
  return q.ns.empty() ? q.local : "{" + q.ns + "}" + q.local;
}

[[noreturn]] void unsupported(const xml::Element& el) {
  fail(ErrorCode::UnsupportedConstruct,
       "unsupported construct <" + qname_string(el.name) + "> at line " +
           std::to_string(el.line));
}

std::string subject_id(const xml::Element& el) {
  if (const auto* about = el.attribute(kRdf, "about")) return local_id(*about);
  if (const auto* id = el.attribute(kRdf, "ID")) return *id;
  fail(ErrorCode::UnsupportedConstruct, "<" + qname_string(el.name) + "> at line " +
                                            std::to_string(el.line) +
                                            " has no rdf:about or rdf:ID (blank nodes are not supported)");
}

std::optional<std::string> resource_of(const xml::Element& el) {
  if (const auto* r = el.attribute(kRdf, "resource")) return *r;
  return std::nullopt;
}

struct LexicalSlots {
  std::map<std::string, std::string> labels, label_weights, synonyms, synonym_weights;

  std::map<std::string, std::string>& slot(Slot s) {
    switch (s) {
      case Slot::Label: return labels;
      case Slot::LabelWeight: return label_weights;
      case Slot::Synonyms: return synonyms;
      case Slot::SynonymWeights: return synonym_weights;
    }
    return labels;
  }
};

struct ClassData {
  std::string id;
  std::optional<std::string> parent;
  std::optional<std::string> label;
  std::optional<std::string> rdfs_label;
  LexicalSlots lexical;
};

struct IndividualData {
  std::string id;
  std::vector<std::string> types;
  std::map<std::string, std::string, std::less<>> attributes;
};

class OwlReader {
 public:
  explicit OwlReader(bool strict) : strict_(strict) {}

  Ontology read(const xml::Element& root) {
    if (root.name.is(kOwl, "Ontology")) {
      // OWL/XML syntax: only the empty document is accepted.
      if (!root.children.empty()) unsupported(*root.children.front());
      return {};
    }
    if (!root.name.is(kRdf, "RDF")) unsupported(root);
    for (const auto& child : root.children) read_node(*child);
    return assemble();
  }

 private:
  void read_node(const xml::Element& el) {
    const auto& n = el.name;
    if (n.ns == kOwl) {
      if (n.local == "Class") return read_class(el);
      if (n.local == "NamedIndividual") return read_individual(el, std::nullopt);
      if (n.local == "Ontology") return read_header(el);
      if (n.local == "AnnotationProperty" || n.local == "DatatypeProperty" ||
          n.local == "ObjectProperty")
        return read_property_declaration(el);
      unsupported(el);
    }
    if (n.is(kRdf, "Description")) return read_description(el);
    if (n.ns == kRdf || n.ns == kRdfs) unsupported(el);
    // Typed node element: <NationalWeatherService rdf:about="#MGM">.
    return read_individual(el, n.local);
  }

  void read_header(const xml::Element& el) {
    for (const auto& c : el.children)
      if (c->name.is(kOwl, "imports")) unsupported(*c);
  }

  void read_property_declaration(const xml::Element& el) {
    for (const auto& c : el.children) {
      if (c->name.ns == kOwl) unsupported(*c);  // property axioms like owl:inverseOf
    }
  }

  void read_description(const xml::Element& el) {
    bool is_class = false;
    for (const auto& c : el.children)
      if (c->name.is(kRdf, "type") && resource_of(*c) &&
          *resource_of(*c) == std::string(kOwl) + "Class")
        is_class = true;
    if (is_class)
      read_class(el);
    else
      read_individual(el, std::nullopt);
  }

  ClassData& class_slot(const std::string& id) {
    auto [it, fresh] = class_index_.try_emplace(id, classes_.size());
    if (fresh) classes_.push_back(ClassData{id, {}, {}, {}, {}});
    return classes_[it->second];
  }

  void read_class(const xml::Element& el) {
    std::string id = subject_id(el);
    ClassData& cls = class_slot(id);
    const std::string where = "class " + id;
    for (const auto& child : el.children) {
      const auto& c = *child;
      const auto& n = c.name;
      if (n.is(kRdf, "type")) {
        auto r = resource_of(c);
        if (!r || *r != std::string(kOwl) + "Class") unsupported(c);
        continue;
      }
      if (n.is(kRdfs, "subClassOf")) {
        auto r = resource_of(c);
        if (!c.children.empty()) unsupported(*c.children.front());
        if (!r) unsupported(c);
        if (*r == std::string(kOwl) + "Thing") continue;
        std::string parent = local_id(*r);
        if (cls.parent && *cls.parent != parent)
          fail(ErrorCode::Validation, where + " has more than one superclass");
        cls.parent = parent;
        continue;
      }
      if (n.is(kRdfs, "comment") || n.is(kRdfs, "seeAlso") || n.is(kRdfs, "isDefinedBy"))
        continue;
      if (n.ns == kOwl || n.ns == kRdf) unsupported(c);
      if (!c.children.empty()) unsupported(*c.children.front());
      if (n.local == "label") {
        if (n.ns == kRdfs) {
          if (!cls.rdfs_label) cls.rdfs_label = trim(c.text);
        } else {
          if (cls.label) fail(ErrorCode::Validation, where + ": repeated 'label'");
          cls.label = trim(c.text);
        }
        continue;
      }
      auto prop = lexical_property(n.local);
      if (!prop) unsupported(c);
      auto& slot = cls.lexical.slot(prop->slot);
      if (!slot.emplace(prop->language, c.text).second)
        fail(ErrorCode::Validation, where + ": repeated '" + n.local + "'");
    }
  }

  void read_individual(const xml::Element& el, std::optional<std::string> typed_as) {
    std::string id = subject_id(el);
    auto [it, fresh] = individual_index_.try_emplace(id, individuals_.size());
    if (fresh) individuals_.push_back(IndividualData{id, {}, {}});
    IndividualData& ind = individuals_[it->second];
    if (typed_as) ind.types.push_back(*typed_as);
    for (const auto& child : el.children) {
      const auto& c = *child;
      const auto& n = c.name;
      if (n.is(kRdf, "type")) {
        auto r = resource_of(c);
        if (!r) unsupported(c);
        if (*r == std::string(kOwl) + "NamedIndividual" || *r == std::string(kOwl) + "Thing")
          continue;
        ind.types.push_back(local_id(*r));
        continue;
      }
      if (n.is(kRdfs, "comment") || n.is(kRdfs, "seeAlso")) continue;
      if (n.ns == kOwl || n.ns == kRdf) unsupported(c);
      if (!c.children.empty()) unsupported(*c.children.front());
      std::string value = resource_of(c) ? *resource_of(c) : trim(c.text);
      if (!ind.attributes.emplace(n.local, std::move(value)).second)
        fail(ErrorCode::Validation, "individual " + id + ": repeated '" + n.local + "'");
    }
  }

  void add_entries(Concept& c, const ClassData& cls) {
    const std::string where = "class " + cls.id;
    const auto& lx = cls.lexical;
    std::set<std::string> languages;
    for (const auto* m : {&lx.labels, &lx.label_weights, &lx.synonyms, &lx.synonym_weights})
      for (const auto& [lang, v] : *m) languages.insert(lang);

    for (const auto& lang : languages) {
      auto label = lx.labels.find(lang);
      auto weight = lx.label_weights.find(lang);
      if ((label == lx.labels.end()) != (weight == lx.label_weights.end())) {
        fail(ErrorCode::Validation,
             where + ": '" + property_name(Slot::Label, lang) + "' and '" +
                 property_name(Slot::LabelWeight, lang) + "' must be given together");
      }
      if (label != lx.labels.end()) {
        LexicalEntry e{trim(label->second), lang, EntryKind::PrimaryLabel,
                       parse_number(weight->second, where)};
        check_weight(e, where);
        c.lexicon.push_back(std::move(e));
      }

      auto syn = lx.synonyms.find(lang);
      auto syn_w = lx.synonym_weights.find(lang);
      auto terms = syn == lx.synonyms.end() ? std::vector<std::string>{} : split_list(syn->second);
      auto weights =
          syn_w == lx.synonym_weights.end() ? std::vector<std::string>{} : split_list(syn_w->second);
      if (terms.size() != weights.size()) {
        fail(ErrorCode::Validation,
             where + ": '" + property_name(Slot::Synonyms, lang) + "' has " +
                 std::to_string(terms.size()) + " phrase(s) but '" +
                 property_name(Slot::SynonymWeights, lang) + "' has " +
                 std::to_string(weights.size()) + " weight(s)");
      }
      for (std::size_t i = 0; i < terms.size(); ++i) {
        LexicalEntry e{terms[i], lang, EntryKind::Synonym, parse_number(weights[i], where)};
        check_weight(e, where);
        c.lexicon.push_back(std::move(e));
      }
    }
  }

  void check_weight(const LexicalEntry& e, const std::string& where) const {
    if (strict_ && !(e.weight >= 0.0 && e.weight <= 1.0))
      fail(ErrorCode::Validation, where + ": weight " + format_weight(e.weight) + " of '" +
                                      e.term + "' is outside [0,1]");
  }

  Ontology assemble() {
    std::vector<Concept> concepts;
    for (const auto& cls : classes_) {
      Concept c;
      c.id = cls.id;
      c.parent = cls.parent;
      c.label = cls.label ? *cls.label : cls.rdfs_label ? *cls.rdfs_label : cls.id;
      add_entries(c, cls);
      concepts.push_back(std::move(c));
    }
    std::vector<Instance> instances;
    for (auto& ind : individuals_) {
      if (ind.types.empty())
        fail(ErrorCode::Validation, "individual " + ind.id + " has no class assertion");
      if (ind.types.size() > 1)
        fail(ErrorCode::UnsupportedConstruct,
             "individual " + ind.id + " is asserted into more than one class");
      instances.push_back(Instance{ind.id, ind.types.front(), std::move(ind.attributes)});
    }
    return Ontology(std::move(concepts), std::move(instances));
  }

  bool strict_;
  std::vector<ClassData> classes_;
  std::map<std::string, std::size_t> class_index_;
  std::vector<IndividualData> individuals_;
  std::map<std::string, std::size_t> individual_index_;
};

std::string escape_xml(std::string_view s, bool attribute) {
  std::string out;
  out.reserve(s.size());
  for (char ch : s) {
    switch (ch) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += attribute ? "&quot;" : "\""; break;
      case '\r': out += "&#13;"; break;
      default: out += ch;
    }
  }
  return out;
}

bool is_xml_name(std::string_view s) {
  if (s.empty()) return false;
  auto start_ok = [](unsigned char c) {
    return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || c == '_';
  };
  if (!start_ok(static_cast<unsigned char>(s[0]))) return false;
  return std::all_of(s.begin(), s.end(), [&](unsigned char c) {
    return start_ok(c) || (c >= '0' && c <= '9') || c == '-' || c == '.';
  });
}

}  // namespace

Ontology parse_owl(std::string_view bytes, ParseOptions options) {
  auto root = xml::parse(bytes);
  Ontology out = OwlReader(options.validate).read(*root);
  if (options.validate) ensure_valid(out);
  return out;
}

std::string serialize_owl(const Ontology& ontology, std::string_view base_iri) {
  ensure_valid(ontology);
  const std::string base(base_iri);
  const std::string ns = base + "#";

  // Per-concept property lines are rendered first so the declarations can
  // list exactly the properties in use.
  std::set<std::string> annotation_props{"label"};
  std::ostringstream body;
  for (const Concept* c : concepts_in_canonical_order(ontology)) {
    body << "    <owl:Class rdf:about=\"" << escape_xml(ns + c->id, true) << "\">\n";
    if (c->parent)
      body << "        <rdfs:subClassOf rdf:resource=\"" << escape_xml(ns + *c->parent, true)
           << "\"/>\n";
    body << "        <label>" << escape_xml(c->label, false) << "</label>\n";

    std::map<std::string, std::pair<std::vector<std::string>, std::vector<std::string>>> synonyms;
    for (const auto& e : c->lexicon) {
      if (e.kind == EntryKind::PrimaryLabel) {
        auto lp = property_name(Slot::Label, e.language);
        auto wp = property_name(Slot::LabelWeight, e.language);
        annotation_props.insert(lp);
        annotation_props.insert(wp);
        body << "        <" << lp << ">" << escape_xml(e.term, false) << "</" << lp << ">\n";
        body << "        <" << wp << " rdf:datatype=\"" << kXsd << "float\">"
             << format_weight(e.weight) << "</" << wp << ">\n";
      } else {
        if (e.term.find(';') != std::string::npos)
          fail(ErrorCode::Validation,
               "concept " + c->id + ": synonym '" + e.term + "' contains the list separator ';'");
        auto& [terms, weights] = synonyms[e.language];
        terms.push_back(e.term);
        weights.push_back(format_weight(e.weight));
      }
    }
    for (const auto& [lang, lists] : synonyms) {
      auto sp = property_name(Slot::Synonyms, lang);
      auto wp = property_name(Slot::SynonymWeights, lang);
      annotation_props.insert(sp);
      annotation_props.insert(wp);
      auto join = [](const std::vector<std::string>& v) {
        std::string s;
        for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ";" : "") + v[i];
        return s;
      };
      body << "        <" << sp << ">" << escape_xml(join(lists.first), false) << "</" << sp
           << ">\n";
      body << "        <" << wp << ">" << join(lists.second) << "</" << wp << ">\n";
    }
    body << "    </owl:Class>\n";
  }

  std::vector<const Instance*> insts;
  for (const auto& i : ontology.instances()) insts.push_back(&i);
  std::sort(insts.begin(), insts.end(),
            [](const Instance* a, const Instance* b) { return a->id < b->id; });
  for (const Instance* i : insts) {
    body << "    <owl:NamedIndividual rdf:about=\"" << escape_xml(ns + i->id, true) << "\">\n";
    body << "        <rdf:type rdf:resource=\"" << escape_xml(ns + i->concept_id, true)
         << "\"/>\n";
    for (const auto& [key, value] : i->attributes) {
      if (!is_xml_name(key))
        fail(ErrorCode::Validation,
             "instance " + i->id + ": attribute '" + key + "' is not a valid XML name");
      annotation_props.insert(key);
      body << "        <" << key << ">" << escape_xml(value, false) << "</" << key << ">\n";
    }
    body << "    </owl:NamedIndividual>\n";
  }

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<rdf:RDF xmlns=\"" << escape_xml(ns, true) << "\"\n"
      << "     xml:base=\"" << escape_xml(base, true) << "\"\n"
      << "     xmlns:owl=\"" << kOwl << "\"\n"
      << "     xmlns:rdf=\"" << kRdf << "\"\n"
      << "     xmlns:rdfs=\"" << kRdfs << "\"\n"
      << "     xmlns:xsd=\"" << kXsd << "\">\n"
      << "    <owl:Ontology rdf:about=\"" << escape_xml(base, true) << "\"/>\n";
  for (const auto& p : annotation_props)
    out << "    <owl:AnnotationProperty rdf:about=\"" << escape_xml(ns + p, true) << "\"/>\n";
  out << body.str() << "</rdf:RDF>\n";
  return out.str();
}

}  // namespace ontowind
