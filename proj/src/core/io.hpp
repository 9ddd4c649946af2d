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

#ifndef ONTOWIND_CORE_IO_HPP
#define ONTOWIND_CORE_IO_HPP

#include <filesystem>
#include <string>
#include <string_view>

#include "core/ontology.hpp"

namespace ontowind {

inline constexpr std::string_view kCanonicalFormatVersion = "1";
inline constexpr std::string_view kDefaultBaseIri = "http://example.org/ontowind";
// Pseudo-path naming the embedded seed ontology wherever a path is accepted.
inline constexpr std::string_view kSeedPath = "@seed";
// Resolves to $ONTOWIND_ONTOLOGY when set, else to kSeedPath.
inline constexpr std::string_view kDefaultPath = "@default";
inline constexpr const char* kOntologyEnvVar = "ONTOWIND_ONTOLOGY";

struct ParseOptions {
  // Run validate() after parsing and throw Error(Validation) on violations.
  bool validate = true;
};

enum class Format { Canonical, Owl };

// OWL subset in RDF/XML: classes, subClassOf, named individuals with class
// assertions, and the lexical/organization annotation properties. Anything
// else fails with Error(UnsupportedConstruct).
Ontology parse_owl(std::string_view bytes, ParseOptions options = {});
std::string serialize_owl(const Ontology& ontology,
                          std::string_view base_iri = kDefaultBaseIri);

Ontology parse_canonical(std::string_view bytes, ParseOptions options = {});
// Deterministic: sorted keys, two-space indent, LF, weights via format_weight.
// Throws Error(Validation) when validate(ontology) is non-empty.
std::string serialize_canonical(const Ontology& ontology);

// Shortest decimal with at most six fractional digits and at least one,
// e.g. 1 -> "1.0", 0.25 -> "0.25", 1/3 -> "0.333333".
std::string format_weight(double value);

Format detect_format(std::string_view bytes) noexcept;
Format format_for_path(const std::filesystem::path& path) noexcept;
Ontology parse_ontology(std::string_view bytes, ParseOptions options = {});
std::string serialize_ontology(const Ontology& ontology, Format format);

std::string resolve_ontology_path(std::string_view path);

// Reads a canonical or OWL file (format sniffed from content); `kSeedPath`
// yields the embedded seed. Throws Error(Io) when unreadable.
Ontology load_ontology_file(const std::string& path, ParseOptions options = {});

// Throws Error(Validation) summarising the violations, if any.
void ensure_valid(const Ontology& ontology);

Ontology load_seed();
std::string_view seed_canonical_bytes() noexcept;

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view bytes);

}  // namespace ontowind

#endif  // ONTOWIND_CORE_IO_HPP
