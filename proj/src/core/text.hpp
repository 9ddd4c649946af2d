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

#ifndef ONTOWIND_CORE_TEXT_HPP
#define ONTOWIND_CORE_TEXT_HPP

#include <string>
#include <string_view>
#include <vector>

namespace ontowind {

struct NormalizeOptions {
  // Strip diacritics and map dotless i to i after case folding. Off by
  // default because it merges Turkish minimal pairs.
  bool fold_diacritics = false;
};

// Case-folded tokens of `text`. Letters, digits and combining marks form
// tokens; whitespace, punctuation (hyphen included) and symbols separate them
// and are dropped. Invalid UTF-8 bytes act as separators.
std::vector<std::string> normalize(std::string_view text, NormalizeOptions options = {});

}  // namespace ontowind

#endif  // ONTOWIND_CORE_TEXT_HPP
