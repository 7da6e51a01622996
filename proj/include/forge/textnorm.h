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

// Character-level normalization of Ethiopic and Latin text.
//
// A NormalizationTable is loaded from a UTF-8 data file with one mapping per
// line, "<variant-sequence>\t<canonical-sequence>". Rows mapping a single
// Ethiopic letter to another Ethiopic letter populate the homophone map; all
// other rows are punctuation rules. Punctuation rules use longest match and
// are applied until the text no longer changes, so the result is always a
// fixed point.

#ifndef FORGE_TEXTNORM_H_
#define FORGE_TEXTNORM_H_

#include <map>
#include <string>
#include <string_view>

namespace forge {

enum class LangProfile { kEthiopic, kLatin };

// Accepts "am"/"ethiopic" and "en"/"latin". Throws ConfigError otherwise.
LangProfile ParseLangProfile(std::string_view name);
const char *LangProfileName(LangProfile profile);

struct NormalizationTable {
  LangProfile profile = LangProfile::kLatin;
  std::map<std::u32string, std::u32string> punct_map;
  std::map<char32_t, char32_t> homophone_map;

  // Longest key in punct_map, in codepoints.
  size_t max_punct_key = 0;

  // Adds one rule, routing it to the right map. Throws ConfigError on an
  // empty variant or a canonical side longer than its variant.
  void AddRule(std::u32string variant, std::u32string canonical);

  // Checks closure: every value is absent as a key or maps to itself, and
  // homophone entries stay inside the Ethiopic block.
  void Validate() const;
};

NormalizationTable ParseNormalizationTable(std::string_view contents,
                                           LangProfile profile);
NormalizationTable LoadNormalizationTable(const std::string &path,
                                          LangProfile profile);

// Path of the table shipped in the data directory for a profile.
std::string DefaultNormalizationTablePath(LangProfile profile);

std::string NormalizePunctuation(std::string_view text,
                                 const NormalizationTable &table);
std::string FoldHomophones(std::string_view text,
                           const NormalizationTable &table);
std::string LowercaseLatin(std::string_view text);

// NFC, then punctuation, then homophone folding (ethiopic) or lowercasing
// (latin).
std::string Normalize(std::string_view text, LangProfile profile,
                      const NormalizationTable &table);

// Codepoint-level variants used by the string entry points.
std::u32string NormalizePunctuation(std::u32string_view text,
                                    const NormalizationTable &table);
std::u32string FoldHomophones(std::u32string_view text,
                              const NormalizationTable &table);
std::u32string LowercaseLatin(std::u32string_view text);

}  // namespace forge

#endif  // FORGE_TEXTNORM_H_
