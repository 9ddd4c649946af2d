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

#include "core/io.hpp"

namespace ontowind {

// Defined in the generated seed_data.cpp.
extern const char kSeedCanonical[];
extern const std::size_t kSeedCanonicalSize;

std::string_view seed_canonical_bytes() noexcept {
  return {kSeedCanonical, kSeedCanonicalSize};
}

Ontology load_seed() { return parse_canonical(seed_canonical_bytes()); }

}  // namespace ontowind
