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

#ifndef ONTOWIND_CORE_XML_DOM_HPP
#define ONTOWIND_CORE_XML_DOM_HPP

#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace ontowind::xml {

// Namespace-resolved name. `ns` is the namespace URI (empty when unqualified).
struct QName {
  std::string ns;
  std::string local;

  bool is(std::string_view n, std::string_view l) const { return ns == n && local == l; }
};

struct Attribute {
  QName name;
  std::string value;
};

struct Element {
  QName name;
  std::vector<Attribute> attributes;
  std::vector<std::unique_ptr<Element>> children;
  std::string text;  // concatenated character data directly under this element
  long line = 0;

  const std::string* attribute(std::string_view ns, std::string_view local) const;
};

// Parses a complete document; throws Error(Xml) on malformed input. Internal
// DTD entity declarations (as emitted by ontology editors) are expanded.
std::unique_ptr<Element> parse(std::string_view bytes);

}  // namespace ontowind::xml

#endif  // ONTOWIND_CORE_XML_DOM_HPP
