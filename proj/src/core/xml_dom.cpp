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

#include "core/xml_dom.hpp"

#include <expat.h>

#include <limits>

#include "core/error.hpp"

namespace ontowind::xml {

namespace {

constexpr char kSep = '\x1f';

QName split_name(const XML_Char* raw) {
  std::string_view s(raw);
  auto cut = s.find(kSep);
  if (cut == std::string_view::npos) return {"", std::string(s)};
  return {std::string(s.substr(0, cut)), std::string(s.substr(cut + 1))};
}

struct Builder {
  XML_Parser parser = nullptr;
  std::unique_ptr<Element> root;
  std::vector<Element*> stack;
  std::string error;

  static void on_start(void* data, const XML_Char* name, const XML_Char** atts) {
    auto* self = static_cast<Builder*>(data);
    auto el = std::make_unique<Element>();
    el->name = split_name(name);
    el->line = static_cast<long>(XML_GetCurrentLineNumber(self->parser));
    for (int i = 0; atts[i]; i += 2)
      el->attributes.push_back({split_name(atts[i]), atts[i + 1]});
    Element* raw = el.get();
    if (self->stack.empty())
      self->root = std::move(el);
    else
      self->stack.back()->children.push_back(std::move(el));
    self->stack.push_back(raw);
  }

  static void on_end(void* data, const XML_Char*) {
    static_cast<Builder*>(data)->stack.pop_back();
  }

  static void on_text(void* data, const XML_Char* s, int len) {
    auto* self = static_cast<Builder*>(data);
    if (!self->stack.empty()) self->stack.back()->text.append(s, static_cast<std::size_t>(len));
  }
};

}  // namespace

const std::string* Element::attribute(std::string_view ns, std::string_view local) const {
  for (const auto& a : attributes)
    if (a.name.is(ns, local)) return &a.value;
  return nullptr;
}

std::unique_ptr<Element> parse(std::string_view bytes) {
  if (bytes.size() > static_cast<std::size_t>(std::numeric_limits<int>::max()))
    fail(ErrorCode::Xml, "document too large");

  Builder b;
  b.parser = XML_ParserCreateNS("UTF-8", kSep);
  if (!b.parser) fail(ErrorCode::Internal, "cannot allocate XML parser");
  std::unique_ptr<std::remove_pointer_t<XML_Parser>, decltype(&XML_ParserFree)> guard(
      b.parser, &XML_ParserFree);

  XML_SetUserData(b.parser, &b);
  XML_SetElementHandler(b.parser, &Builder::on_start, &Builder::on_end);
  XML_SetCharacterDataHandler(b.parser, &Builder::on_text);
  XML_SetParamEntityParsing(b.parser, XML_PARAM_ENTITY_PARSING_NEVER);

  if (XML_Parse(b.parser, bytes.data(), static_cast<int>(bytes.size()), XML_TRUE) ==
      XML_STATUS_ERROR) {
    fail(ErrorCode::Xml, std::string(XML_ErrorString(XML_GetErrorCode(b.parser))) +
                             " at line " +
                             std::to_string(XML_GetCurrentLineNumber(b.parser)));
  }
  if (!b.root) fail(ErrorCode::Xml, "document has no root element");
  return std::move(b.root);
}

}  // namespace ontowind::xml
