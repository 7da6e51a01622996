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

// Rule-based sentence splitting.
//
// Boundary characters are U+1362 (Ethiopic full stop) and '?' for Ethiopic
// text, '.' and '?' for Latin text. A boundary character ends a sentence
// only when it lies outside every protected span (URLs, e-mail addresses,
// hashtags, wordlist abbreviations and clitics, initials) and the run of
// closing punctuation after it is followed by whitespace or end of text.
// '!' never ends a sentence; runs of three or more periods are ellipses.

#ifndef FORGE_SEGMENT_H_
#define FORGE_SEGMENT_H_

#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "forge/textnorm.h"

namespace forge {

// Entries whose terminal punctuation must never end a sentence. Matching is
// case-insensitive; entries are stored lowercased.
struct NegativeWordlist {
  LangProfile profile = LangProfile::kLatin;
  std::set<std::u32string> abbreviations;
  std::set<std::u32string> clitics;

  // Throws ConfigError if the entry has no terminal punctuation character.
  void AddAbbreviation(std::u32string_view entry);
  void AddClitic(std::u32string_view entry);
};

// One entry per line; an optional second column "clitic" or "abbreviation"
// (the default) selects the kind. '#' starts a comment line.
NegativeWordlist ParseWordlist(std::string_view contents, LangProfile profile);
NegativeWordlist LoadWordlist(const std::string &path, LangProfile profile);
std::string DefaultWordlistPath(LangProfile profile);

enum class SpanKind { kAbbreviation, kInitial, kClitic, kUrl, kEmail, kHashtag };

const char *SpanKindName(SpanKind kind);

// Half-open codepoint range [start, end).
struct ProtectedSpan {
  size_t start = 0;
  size_t end = 0;
  SpanKind kind = SpanKind::kAbbreviation;

  bool operator==(const ProtectedSpan &) const = default;
};

bool IsTerminalPunctuation(char32_t cp);

// Sorted, non-overlapping spans; overlapping candidates are resolved
// longest-first.
std::vector<ProtectedSpan> ProtectSpans(std::u32string_view text,
                                        const NegativeWordlist &list);
std::vector<ProtectedSpan> ProtectSpans(std::string_view text,
                                        const NegativeWordlist &list);

// Codepoint offsets one past each accepted boundary (the cut points).
std::vector<size_t> FindBoundaries(std::u32string_view text,
                                   LangProfile profile,
                                   const NegativeWordlist &list);

// Sentences are trimmed, non-empty and keep their terminal punctuation.
std::vector<std::string> SplitSentences(std::string_view text,
                                        LangProfile profile,
                                        const NegativeWordlist &list);

}  // namespace forge

#endif  // FORGE_SEGMENT_H_
