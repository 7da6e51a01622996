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

#include "forge/segment.h"

#include <algorithm>

#include "forge/error.h"
#include "forge/io.h"
#include "forge/unicode.h"

namespace forge {
namespace {

constexpr char32_t kEthiopicFullStop = 0x1362;

std::u32string Lower(std::u32string_view text) {
  std::u32string out(text);
  for (char32_t &cp : out) cp = SimpleLower(cp);
  return out;
}

bool IsOpening(char32_t cp) {
  return cp == U'(' || cp == U'[' || cp == U'{' || cp == U'"' ||
         cp == U'\'' || cp == 0x00AB || cp == 0x2039 || cp == 0x201C ||
         cp == 0x2018;
}

bool IsClosing(char32_t cp) {
  return cp == U')' || cp == U']' || cp == U'}' || cp == U'"' ||
         cp == U'\'' || cp == 0x00BB || cp == 0x203A || cp == 0x201D ||
         cp == 0x2019 || cp == U'!';
}

bool IsWordChar(char32_t cp) { return IsAlphabetic(cp) || IsDigit(cp); }

bool IsAsciiAlnum(char32_t cp) {
  return (cp >= U'a' && cp <= U'z') || (cp >= U'A' && cp <= U'Z') ||
         (cp >= U'0' && cp <= U'9');
}

bool IsEmailLocalChar(char32_t cp) {
  return IsAsciiAlnum(cp) || cp == U'.' || cp == U'_' || cp == U'%' ||
         cp == U'+' || cp == U'-';
}

bool IsDomainChar(char32_t cp) {
  return IsAsciiAlnum(cp) || cp == U'.' || cp == U'-';
}

bool IsBoundaryChar(char32_t cp, LangProfile profile) {
  if (cp == U'?') return true;
  return profile == LangProfile::kEthiopic ? cp == kEthiopicFullStop
                                           : cp == U'.';
}

bool StartsWithInsensitive(std::u32string_view text, std::u32string_view prefix) {
  if (prefix.size() > text.size()) return false;
  for (size_t i = 0; i < prefix.size(); ++i) {
    if (SimpleLower(text[i]) != prefix[i]) return false;
  }
  return true;
}

// Candidate collection over one whitespace-delimited word [begin, end).
class SpanCollector {
 public:
  SpanCollector(std::u32string_view text, const NegativeWordlist &list,
                std::vector<ProtectedSpan> *out)
      : text_(text), list_(list), out_(out) {}

  void Word(size_t begin, size_t end) {
    size_t core = begin;
    while (core < end && IsOpening(text_[core])) ++core;
    if (core == end) return;
    Url(core, end);
    Emails(core, end);
    Hashtags(begin, end);
    Abbreviations(core, end);
    Initials(core, end);
    Clitics(core, end);
  }

 private:
  void Add(size_t start, size_t end, SpanKind kind) {
    if (start < end) out_->push_back({start, end, kind});
  }

  // Drops trailing punctuation so a URL at the end of a sentence does not
  // swallow the boundary.
  size_t TrimTrailing(size_t begin, size_t end) const {
    while (end > begin) {
      const char32_t cp = text_[end - 1];
      if (IsTerminalPunctuation(cp) || IsClosing(cp) || cp == U',' ||
          cp == U';' || cp == U':') {
        --end;
      } else {
        break;
      }
    }
    return end;
  }

  void Url(size_t core, size_t end) {
    std::u32string_view word = text_.substr(core, end - core);
    size_t prefix = 0;
    if (StartsWithInsensitive(word, U"www.")) {
      prefix = 4;
    } else {
      size_t k = 0;
      while (k < word.size() && (IsAsciiAlnum(word[k]) || word[k] == U'+' ||
                                 word[k] == U'-' || word[k] == U'.')) {
        ++k;
      }
      if (k == 0 || !IsAsciiAlnum(word[0]) || IsDigit(word[0])) return;
      if (word.substr(k, 3) != U"://") return;
      prefix = k + 3;
    }
    const size_t stop = TrimTrailing(core + prefix, end);
    if (stop > core + prefix) Add(core, stop, SpanKind::kUrl);
  }

  void Emails(size_t core, size_t end) {
    for (size_t at = core + 1; at + 1 < end; ++at) {
      if (text_[at] != U'@') continue;
      size_t left = at;
      while (left > core && IsEmailLocalChar(text_[left - 1])) --left;
      size_t right = at + 1;
      while (right < end && IsDomainChar(text_[right])) ++right;
      while (right > at + 1 &&
             (text_[right - 1] == U'.' || text_[right - 1] == U'-')) {
        --right;
      }
      if (left == at || right == at + 1) continue;
      std::u32string_view domain = text_.substr(at + 1, right - at - 1);
      const size_t dot = domain.rfind(U'.');
      if (dot == std::u32string_view::npos || dot == 0) continue;
      std::u32string_view tld = domain.substr(dot + 1);
      if (tld.size() < 2) continue;
      if (!std::all_of(tld.begin(), tld.end(), [](char32_t c) {
            return (c >= U'a' && c <= U'z') || (c >= U'A' && c <= U'Z');
          })) {
        continue;
      }
      Add(left, right, SpanKind::kEmail);
    }
  }

  void Hashtags(size_t begin, size_t end) {
    for (size_t i = begin; i + 1 < end; ++i) {
      if (text_[i] != U'#') continue;
      if (i > begin && IsWordChar(text_[i - 1])) continue;
      size_t j = i + 1;
      while (j < end && (IsWordChar(text_[j]) || text_[j] == U'_')) ++j;
      if (j > i + 1) Add(i, j, SpanKind::kHashtag);
      i = j - 1;
    }
  }

  void Abbreviations(size_t core, size_t end) {
    std::u32string_view word = text_.substr(core, end - core);
    size_t best = 0;
    for (const std::u32string &entry : list_.abbreviations) {
      if (entry.size() <= best || !StartsWithInsensitive(word, entry)) continue;
      if (entry.size() < word.size() && IsWordChar(word[entry.size()])) continue;
      best = entry.size();
    }
    if (best > 0) Add(core, core + best, SpanKind::kAbbreviation);
  }

  // One or more letter+period groups forming the whole word core, e.g.
  // "J." or "U.S.A.".
  void Initials(size_t core, size_t end) {
    size_t i = core;
    while (i + 1 < end && IsAlphabetic(text_[i]) && text_[i + 1] == U'.') {
      i += 2;
    }
    if (i == core) return;
    if (i < end && IsWordChar(text_[i])) return;
    Add(core, i, SpanKind::kInitial);
  }

  void Clitics(size_t core, size_t end) {
    const size_t stop = end;
    for (const std::u32string &entry : list_.clitics) {
      // Allow closing punctuation after the clitic.
      size_t tail = stop;
      while (tail > core && IsClosing(text_[tail - 1]) &&
             tail - core > entry.size()) {
        --tail;
      }
      if (tail - core <= entry.size()) continue;
      const size_t start = tail - entry.size();
      if (StartsWithInsensitive(text_.substr(start, entry.size()), entry)) {
        Add(start, tail, SpanKind::kClitic);
      }
    }
  }

  std::u32string_view text_;
  const NegativeWordlist &list_;
  std::vector<ProtectedSpan> *out_;
};

std::vector<char> CoverageMask(size_t size,
                               const std::vector<ProtectedSpan> &spans) {
  std::vector<char> covered(size, 0);
  for (const ProtectedSpan &span : spans) {
    std::fill(covered.begin() + span.start, covered.begin() + span.end, 1);
  }
  return covered;
}

}  // namespace

bool IsTerminalPunctuation(char32_t cp) {
  return cp == U'.' || cp == U'?' || cp == U'!' || cp == kEthiopicFullStop ||
         cp == 0x1367;
}

void NegativeWordlist::AddAbbreviation(std::u32string_view entry) {
  if (std::none_of(entry.begin(), entry.end(), IsTerminalPunctuation)) {
    throw ConfigError("wordlist entry without terminal punctuation: " +
                      EncodeUtf8(entry));
  }
  abbreviations.insert(Lower(entry));
}

void NegativeWordlist::AddClitic(std::u32string_view entry) {
  if (std::none_of(entry.begin(), entry.end(), IsTerminalPunctuation)) {
    throw ConfigError("wordlist entry without terminal punctuation: " +
                      EncodeUtf8(entry));
  }
  clitics.insert(Lower(entry));
}

NegativeWordlist ParseWordlist(std::string_view contents, LangProfile profile) {
  NegativeWordlist list;
  list.profile = profile;
  for (const TableRow &row : ParseTable(contents)) {
    const std::u32string entry = DecodeUtf8(Trim(row.cells[0]));
    const std::string kind = row.cells.size() > 1 ? Trim(row.cells[1]) : "";
    if (kind.empty() || kind == "abbreviation") {
      list.AddAbbreviation(entry);
    } else if (kind == "clitic") {
      list.AddClitic(entry);
    } else {
      throw ConfigError("wordlist line " + std::to_string(row.line_number) +
                        ": unknown kind '" + kind + "'");
    }
  }
  return list;
}

NegativeWordlist LoadWordlist(const std::string &path, LangProfile profile) {
  return ParseWordlist(ReadFile(path), profile);
}

std::string DefaultWordlistPath(LangProfile profile) {
  return std::string(FORGE_DATA_DIR) + (profile == LangProfile::kEthiopic
                                            ? "/wordlist_am.txt"
                                            : "/wordlist_en.txt");
}

const char *SpanKindName(SpanKind kind) {
  switch (kind) {
    case SpanKind::kAbbreviation: return "abbreviation";
    case SpanKind::kInitial: return "initial";
    case SpanKind::kClitic: return "clitic";
    case SpanKind::kUrl: return "url";
    case SpanKind::kEmail: return "email";
    case SpanKind::kHashtag: return "hashtag";
  }
  return "unknown";
}

std::vector<ProtectedSpan> ProtectSpans(std::u32string_view text,
                                        const NegativeWordlist &list) {
  std::vector<ProtectedSpan> candidates;
  SpanCollector collector(text, list, &candidates);
  size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && IsSpace(text[i])) ++i;
    const size_t begin = i;
    while (i < text.size() && !IsSpace(text[i])) ++i;
    if (i > begin) collector.Word(begin, i);
  }

  std::stable_sort(candidates.begin(), candidates.end(),
                   [](const ProtectedSpan &a, const ProtectedSpan &b) {
                     const size_t la = a.end - a.start, lb = b.end - b.start;
                     if (la != lb) return la > lb;
                     return a.start < b.start;
                   });
  std::vector<ProtectedSpan> accepted;
  for (const ProtectedSpan &c : candidates) {
    const bool overlaps = std::any_of(
        accepted.begin(), accepted.end(), [&](const ProtectedSpan &a) {
          return c.start < a.end && a.start < c.end;
        });
    if (!overlaps) accepted.push_back(c);
  }
  std::sort(accepted.begin(), accepted.end(),
            [](const ProtectedSpan &a, const ProtectedSpan &b) {
              return a.start < b.start;
            });
  return accepted;
}

std::vector<ProtectedSpan> ProtectSpans(std::string_view text,
                                        const NegativeWordlist &list) {
  return ProtectSpans(std::u32string_view(DecodeUtf8(text)), list);
}

std::vector<size_t> FindBoundaries(std::u32string_view text,
                                   LangProfile profile,
                                   const NegativeWordlist &list) {
  const std::vector<char> covered =
      CoverageMask(text.size(), ProtectSpans(text, list));
  std::vector<size_t> cuts;
  size_t i = 0;
  while (i < text.size()) {
    if (covered[i] || !IsBoundaryChar(text[i], profile)) {
      ++i;
      continue;
    }
    if (text[i] == U'.') {
      size_t run_end = i;
      while (run_end < text.size() && text[run_end] == U'.') ++run_end;
      size_t run_begin = i;
      while (run_begin > 0 && text[run_begin - 1] == U'.') --run_begin;
      if (run_end - run_begin >= 3) {
        i = run_end;
        continue;
      }
    }
    size_t j = i + 1;
    while (j < text.size() && !covered[j] &&
           (IsBoundaryChar(text[j], profile) || IsClosing(text[j]))) {
      ++j;
    }
    if (j == text.size() || IsSpace(text[j])) cuts.push_back(j);
    i = j;
  }
  return cuts;
}

std::vector<std::string> SplitSentences(std::string_view text,
                                        LangProfile profile,
                                        const NegativeWordlist &list) {
  const std::u32string decoded = DecodeUtf8(text);
  std::vector<std::string> sentences;
  size_t start = 0;
  auto emit = [&](size_t end) {
    std::string sentence =
        Trim(EncodeUtf8(std::u32string_view(decoded).substr(start, end - start)));
    if (!sentence.empty()) sentences.push_back(std::move(sentence));
    start = end;
  };
  for (size_t cut : FindBoundaries(decoded, profile, list)) emit(cut);
  emit(decoded.size());
  return sentences;
}

}  // namespace forge
