// Copyright 2026 The Forge Authors
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

#include "forge/unicode.h"

#include <unicode/normalizer2.h>
#include <unicode/uchar.h>
#include <unicode/unistr.h>
#include <unicode/uscript.h>
#include <unicode/utf8.h>

#include "forge/error.h"

namespace forge {

std::u32string DecodeUtf8(std::string_view bytes) {
  std::u32string out;
  out.reserve(bytes.size());
  const auto *s = reinterpret_cast<const uint8_t *>(bytes.data());
  const int32_t length = static_cast<int32_t>(bytes.size());
  int32_t i = 0;
  while (i < length) {
    const int32_t start = i;
    UChar32 c;
    U8_NEXT(s, i, length, c);
    if (c < 0) throw DecodeError("invalid UTF-8", static_cast<size_t>(start));
    out.push_back(static_cast<char32_t>(c));
  }
  return out;
}

size_t FindInvalidUtf8(std::string_view bytes) {
  const auto *s = reinterpret_cast<const uint8_t *>(bytes.data());
  const int32_t length = static_cast<int32_t>(bytes.size());
  int32_t i = 0;
  while (i < length) {
    const int32_t start = i;
    UChar32 c;
    U8_NEXT(s, i, length, c);
    if (c < 0) return static_cast<size_t>(start);
  }
  return std::string_view::npos;
}

void AppendUtf8(char32_t cp, std::string *out) {
  uint8_t buf[U8_MAX_LENGTH];
  int32_t n = 0;
  U8_APPEND_UNSAFE(buf, n, static_cast<UChar32>(cp));
  out->append(reinterpret_cast<const char *>(buf), n);
}

std::string EncodeUtf8(std::u32string_view text) {
  std::string out;
  out.reserve(text.size() * 2);
  for (char32_t cp : text) AppendUtf8(cp, &out);
  return out;
}

std::u32string ToNfc(std::u32string_view text) {
  UErrorCode status = U_ZERO_ERROR;
  const icu::Normalizer2 *nfc = icu::Normalizer2::getNFCInstance(status);
  if (U_FAILURE(status)) throw Error("ICU NFC normalizer unavailable");
  icu::UnicodeString in = icu::UnicodeString::fromUTF32(
      reinterpret_cast<const UChar32 *>(text.data()),
      static_cast<int32_t>(text.size()));
  if (nfc->isNormalized(in, status) && U_SUCCESS(status)) {
    return std::u32string(text);
  }
  status = U_ZERO_ERROR;
  icu::UnicodeString normalized = nfc->normalize(in, status);
  if (U_FAILURE(status)) throw Error("NFC normalization failed");
  std::u32string out(normalized.countChar32(), U'\0');
  status = U_ZERO_ERROR;
  normalized.toUTF32(reinterpret_cast<UChar32 *>(out.data()),
                     static_cast<int32_t>(out.size()), status);
  return out;
}

bool IsEthiopic(char32_t cp) {
  return (cp >= 0x1200 && cp <= 0x139F) || (cp >= 0x2D80 && cp <= 0x2DDF) ||
         (cp >= 0xAB00 && cp <= 0xAB2F) || (cp >= 0x1E7E0 && cp <= 0x1E7FF);
}

bool IsLatinLetter(char32_t cp) {
  UErrorCode status = U_ZERO_ERROR;
  return u_isUAlphabetic(static_cast<UChar32>(cp)) &&
         uscript_getScript(static_cast<UChar32>(cp), &status) == USCRIPT_LATIN;
}

bool IsAlphabetic(char32_t cp) {
  return u_isUAlphabetic(static_cast<UChar32>(cp));
}

bool IsDigit(char32_t cp) { return u_isdigit(static_cast<UChar32>(cp)); }

bool IsSpace(char32_t cp) { return u_isUWhiteSpace(static_cast<UChar32>(cp)); }

char32_t SimpleLower(char32_t cp) {
  return static_cast<char32_t>(u_tolower(static_cast<UChar32>(cp)));
}

std::vector<std::string> SplitWhitespace(std::string_view text) {
  std::vector<std::string> out;
  std::string current;
  const auto *s = reinterpret_cast<const uint8_t *>(text.data());
  const int32_t length = static_cast<int32_t>(text.size());
  int32_t i = 0;
  while (i < length) {
    const int32_t start = i;
    UChar32 c;
    U8_NEXT(s, i, length, c);
    if (c >= 0 && u_isUWhiteSpace(c)) {
      if (!current.empty()) out.push_back(std::move(current));
      current.clear();
    } else {
      current.append(text.substr(start, i - start));
    }
  }
  if (!current.empty()) out.push_back(std::move(current));
  return out;
}

size_t CountTokens(std::string_view text) {
  return SplitWhitespace(text).size();
}

std::string CollapseWhitespace(std::string_view text) {
  std::string out;
  for (const std::string &token : SplitWhitespace(text)) {
    if (!out.empty()) out.push_back(' ');
    out += token;
  }
  return out;
}

std::string Trim(std::string_view text) {
  const auto *s = reinterpret_cast<const uint8_t *>(text.data());
  const int32_t length = static_cast<int32_t>(text.size());
  int32_t begin = -1;
  int32_t end = 0;
  int32_t i = 0;
  while (i < length) {
    const int32_t start = i;
    UChar32 c;
    U8_NEXT(s, i, length, c);
    if (c < 0 || !u_isUWhiteSpace(c)) {
      if (begin < 0) begin = start;
      end = i;
    }
  }
  if (begin < 0) return std::string();
  return std::string(text.substr(begin, end - begin));
}

}  // namespace forge
