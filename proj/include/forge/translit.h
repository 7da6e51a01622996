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

// Reversible romanization of Ethiopic text.
//
// The table maps single Ethiopic codepoints to lowercase Latin strings. The
// images must be distinct and form a prefix-free code, which is checked at
// load time and makes greedy longest-match decoding exact.

#ifndef FORGE_TRANSLIT_H_
#define FORGE_TRANSLIT_H_

#include <map>
#include <set>
#include <string>
#include <string_view>

#include "forge/error.h"

namespace forge {

class UnmappedCharacterError : public Error {
 public:
  UnmappedCharacterError(char32_t cp, size_t offset);

  char32_t codepoint() const { return codepoint_; }
  size_t offset() const { return offset_; }

 private:
  char32_t codepoint_;
  size_t offset_;
};

class TranslitTable {
 public:
  // Throws ConfigError on duplicate keys or images, non-Ethiopic keys,
  // uppercase images, or a violation of prefix-freeness.
  static TranslitTable Parse(std::string_view contents);
  static TranslitTable Load(const std::string &path);
  static std::string DefaultPath();

  const std::map<char32_t, std::u32string> &forward() const { return forward_; }
  const std::map<std::u32string, char32_t> &reverse() const { return reverse_; }

  // Ethiopic codepoints become their images; everything else passes
  // through. Throws UnmappedCharacterError (codepoint offset).
  std::string Romanize(std::string_view text) const;

  // Longest-match decoding. Characters that cannot start any image pass
  // through; a character that starts an image prefix but completes no image
  // raises DecodeError with its codepoint offset.
  std::string Deromanize(std::string_view text) const;

 private:
  void Add(char32_t ethiopic, std::u32string latin, size_t line);
  void CheckPrefixFree() const;

  std::map<char32_t, std::u32string> forward_;
  std::map<std::u32string, char32_t> reverse_;
  // Every non-empty proper prefix of an image.
  std::set<std::u32string> prefixes_;
  size_t max_image_ = 0;
};

}  // namespace forge

#endif  // FORGE_TRANSLIT_H_
