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

#ifndef ONTOWIND_CORE_ERROR_HPP
#define ONTOWIND_CORE_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace ontowind {

// Error categories. The numeric values are mirrored by ow_status in the C
// header and must stay in sync with it.
enum class ErrorCode {
  InvalidArgument = 1,
  UnknownId = 2,
  Io = 3,
  Xml = 4,
  UnsupportedConstruct = 5,
  Validation = 6,
  Json = 7,
  Schema = 8,
  DuplicateId = 9,
  LabelMismatch = 10,
  EmptyMatrix = 11,
  StoreCorrupted = 12,
  Internal = 13,
};

std::string_view error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace ontowind

#endif  // ONTOWIND_CORE_ERROR_HPP
