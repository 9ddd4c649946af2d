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

#include "core/text.hpp"

#include <unicode/uchar.h>
#include <unicode/unorm2.h>
#include <unicode/ustring.h>
#include <unicode/utf16.h>
#include <unicode/utf8.h>

#include "core/error.hpp"

namespace ontowind {

namespace {

bool is_token_char(UChar32 c) {
  if (c < 0x80) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9');
  }
  if (u_isalnum(c)) return true;
  switch (u_charType(c)) {
    case U_NON_SPACING_MARK:
    case U_COMBINING_SPACING_MARK:
    case U_ENCLOSING_MARK:
      return true;
    default:
      return false;
  }
}

std::string to_utf8(const std::u16string& s) {
  std::string out;
  out.reserve(s.size());
  for (std::size_t i = 0; i < s.size();) {
    UChar32 c;
    U16_NEXT(s.data(), i, s.size(), c);
    char buf[4];
    int32_t n = 0;
    UBool err = false;
    U8_APPEND(reinterpret_cast<uint8_t*>(buf), n, 4, c, err);
    if (!err) out.append(buf, static_cast<std::size_t>(n));
  }
  return out;
}

std::u16string fold_case(const std::u16string& in) {
  if (in.empty()) return in;
  std::u16string out(in.size() * 3 + 4, u'\0');
  UErrorCode status = U_ZERO_ERROR;
  int32_t n = u_strFoldCase(reinterpret_cast<UChar*>(out.data()),
                            static_cast<int32_t>(out.size()),
                            reinterpret_cast<const UChar*>(in.data()),
                            static_cast<int32_t>(in.size()), U_FOLD_CASE_DEFAULT, &status);
  if (U_FAILURE(status)) fail(ErrorCode::Internal, u_errorName(status));
  out.resize(static_cast<std::size_t>(n));
  return out;
}

std::u16string strip_diacritics(const std::u16string& in) {
  UErrorCode status = U_ZERO_ERROR;
  const UNormalizer2* nfd = unorm2_getNFDInstance(&status);
  if (U_FAILURE(status)) fail(ErrorCode::Internal, u_errorName(status));
  std::u16string decomposed(in.size() * 4 + 4, u'\0');
  int32_t n = unorm2_normalize(nfd, reinterpret_cast<const UChar*>(in.data()),
                               static_cast<int32_t>(in.size()),
                               reinterpret_cast<UChar*>(decomposed.data()),
                               static_cast<int32_t>(decomposed.size()), &status);
  if (U_FAILURE(status)) fail(ErrorCode::Internal, u_errorName(status));
  decomposed.resize(static_cast<std::size_t>(n));

  std::u16string out;
  out.reserve(decomposed.size());
  for (std::size_t i = 0; i < decomposed.size();) {
    UChar32 c;
    U16_NEXT(decomposed.data(), i, decomposed.size(), c);
    if (u_charType(c) == U_NON_SPACING_MARK) continue;
    if (c == 0x0131) c = 'i';  // dotless i has no decomposition
    UChar buf[2];
    int32_t len = 0;
    U16_APPEND_UNSAFE(buf, len, c);
    out.append(reinterpret_cast<char16_t*>(buf), static_cast<std::size_t>(len));
  }
  return out;
}

}  // namespace

std::vector<std::string> normalize(std::string_view text, NormalizeOptions options) {
  std::vector<std::string> tokens;
  std::u16string current;

  auto flush = [&] {
    if (current.empty()) return;
    std::u16string folded = fold_case(current);
    if (options.fold_diacritics) folded = strip_diacritics(folded);
    tokens.push_back(to_utf8(folded));
    current.clear();
  };

  const auto* bytes = reinterpret_cast<const uint8_t*>(text.data());
  const auto length = static_cast<int32_t>(text.size());
  for (int32_t i = 0; i < length;) {
    UChar32 c;
    U8_NEXT(bytes, i, length, c);
    if (c < 0 || !is_token_char(c)) {
      flush();
      continue;
    }
    // Simple case folding leaves capital dotted I alone and full folding
    // appends a combining dot; both break matching against "i".
    if (c == 0x0130) c = 'i';
    UChar buf[2];
    int32_t len = 0;
    U16_APPEND_UNSAFE(buf, len, c);
    current.append(reinterpret_cast<char16_t*>(buf), static_cast<std::size_t>(len));
  }
  flush();
  return tokens;
}

}  // namespace ontowind
