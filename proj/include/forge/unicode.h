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

// UTF-8 <-> codepoint conversion and the handful of character properties the
// text modules need. Property lookups are delegated to ICU.

#ifndef FORGE_UNICODE_H_
#define FORGE_UNICODE_H_

#include <string>
#include <string_view>
#include <vector>

namespace forge {

// Decodes UTF-8. Throws DecodeError (byte offset) on malformed input.
std::u32string DecodeUtf8(std::string_view bytes);

// Encodes codepoints as UTF-8.
std::string EncodeUtf8(std::u32string_view text);
void AppendUtf8(char32_t cp, std::string *out);

// Returns the byte offset of the first malformed sequence, or npos.
size_t FindInvalidUtf8(std::string_view bytes);

// Canonical composition (NFC).
std::u32string ToNfc(std::u32string_view text);

bool IsEthiopic(char32_t cp);
bool IsLatinLetter(char32_t cp);
bool IsAlphabetic(char32_t cp);
bool IsDigit(char32_t cp);
bool IsSpace(char32_t cp);

// Simple (single codepoint, locale-independent) lowercase mapping.
char32_t SimpleLower(char32_t cp);

// Splits on Unicode whitespace, dropping empty pieces.
std::vector<std::string> SplitWhitespace(std::string_view text);

// Number of whitespace-separated tokens.
size_t CountTokens(std::string_view text);

// Collapses whitespace runs to one ASCII space and trims both ends.
std::string CollapseWhitespace(std::string_view text);

std::string Trim(std::string_view text);

}  // namespace forge

#endif  // FORGE_UNICODE_H_
