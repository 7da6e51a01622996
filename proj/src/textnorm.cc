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

#include "forge/textnorm.h"

#include "forge/error.h"
#include "forge/io.h"
#include "forge/unicode.h"

namespace forge {
namespace {

// Upper bound on rewrite passes. Every accepted table converges in at most
// a couple of passes; hitting the bound means the rules feed each other.
constexpr int kMaxPasses = 32;

std::string Hex(char32_t cp) {
  char buf[16];
  snprintf(buf, sizeof(buf), "U+%04X", static_cast<unsigned>(cp));
  return buf;
}

bool IsEthiopicLetter(char32_t cp) {
  return IsEthiopic(cp) && IsAlphabetic(cp);
}

std::u32string PunctuationPass(std::u32string_view text,
                               const NormalizationTable &table) {
  std::u32string out;
  out.reserve(text.size());
  size_t i = 0;
  while (i < text.size()) {
    bool matched = false;
    const size_t longest = std::min(table.max_punct_key, text.size() - i);
    for (size_t len = longest; len > 0; --len) {
      auto it = table.punct_map.find(std::u32string(text.substr(i, len)));
      if (it != table.punct_map.end()) {
        out += it->second;
        i += len;
        matched = true;
        break;
      }
    }
    if (!matched) out.push_back(text[i++]);
  }
  return out;
}

}  // namespace

LangProfile ParseLangProfile(std::string_view name) {
  if (name == "am" || name == "ethiopic") return LangProfile::kEthiopic;
  if (name == "en" || name == "latin") return LangProfile::kLatin;
  throw ConfigError("unknown language profile '" + std::string(name) + "'");
}

const char *LangProfileName(LangProfile profile) {
  return profile == LangProfile::kEthiopic ? "ethiopic" : "latin";
}

void NormalizationTable::AddRule(std::u32string variant,
                                 std::u32string canonical) {
  if (variant.empty()) throw ConfigError("normalization rule with empty variant");
  if (canonical.size() > variant.size()) {
    throw ConfigError("normalization rule lengthens text: " +
                      EncodeUtf8(variant) + " -> " + EncodeUtf8(canonical));
  }
  if (variant.size() == 1 && canonical.size() == 1 &&
      IsEthiopicLetter(variant[0]) && IsEthiopicLetter(canonical[0])) {
    homophone_map[variant[0]] = canonical[0];
    return;
  }
  max_punct_key = std::max(max_punct_key, variant.size());
  punct_map[std::move(variant)] = std::move(canonical);
}

void NormalizationTable::Validate() const {
  for (const auto &[variant, canonical] : punct_map) {
    auto it = punct_map.find(canonical);
    if (it != punct_map.end() && it->second != canonical) {
      throw ConfigError("punctuation target " + EncodeUtf8(canonical) +
                        " is itself rewritten");
    }
  }
  for (const auto &[variant, canonical] : homophone_map) {
    if (!IsEthiopic(variant) || !IsEthiopic(canonical)) {
      throw ConfigError("homophone entry outside the Ethiopic block: " +
                        Hex(variant) + " -> " + Hex(canonical));
    }
    auto it = homophone_map.find(canonical);
    if (it != homophone_map.end() && it->second != canonical) {
      throw ConfigError("homophone target " + Hex(canonical) +
                        " is itself folded to " + Hex(it->second));
    }
  }
}

NormalizationTable ParseNormalizationTable(std::string_view contents,
                                           LangProfile profile) {
  NormalizationTable table;
  table.profile = profile;
  for (const TableRow &row : ParseTable(contents)) {
    if (row.cells.size() != 2) {
      throw ConfigError("normalization table line " +
                        std::to_string(row.line_number) +
                        ": expected variant<TAB>canonical");
    }
    table.AddRule(DecodeUtf8(row.cells[0]), DecodeUtf8(row.cells[1]));
  }
  table.Validate();
  return table;
}

NormalizationTable LoadNormalizationTable(const std::string &path,
                                          LangProfile profile) {
  return ParseNormalizationTable(ReadFile(path), profile);
}

std::string DefaultNormalizationTablePath(LangProfile profile) {
  return std::string(FORGE_DATA_DIR) +
         (profile == LangProfile::kEthiopic ? "/norm_am.tsv" : "/norm_en.tsv");
}

std::u32string NormalizePunctuation(std::u32string_view text,
                                    const NormalizationTable &table) {
  std::u32string current(text);
  for (int pass = 0; pass < kMaxPasses; ++pass) {
    std::u32string next = PunctuationPass(current, table);
    if (next == current) return next;
    current = std::move(next);
  }
  throw ConfigError("punctuation rules do not converge");
}

std::u32string FoldHomophones(std::u32string_view text,
                              const NormalizationTable &table) {
  std::u32string out(text);
  for (char32_t &cp : out) {
    auto it = table.homophone_map.find(cp);
    if (it != table.homophone_map.end()) cp = it->second;
  }
  return out;
}

std::u32string LowercaseLatin(std::u32string_view text) {
  std::u32string out(text);
  for (char32_t &cp : out) {
    if (IsLatinLetter(cp)) cp = SimpleLower(cp);
  }
  return out;
}

std::string NormalizePunctuation(std::string_view text,
                                 const NormalizationTable &table) {
  return EncodeUtf8(NormalizePunctuation(DecodeUtf8(text), table));
}

std::string FoldHomophones(std::string_view text,
                           const NormalizationTable &table) {
  return EncodeUtf8(FoldHomophones(DecodeUtf8(text), table));
}

std::string LowercaseLatin(std::string_view text) {
  return EncodeUtf8(LowercaseLatin(DecodeUtf8(text)));
}

std::string Normalize(std::string_view text, LangProfile profile,
                      const NormalizationTable &table) {
  std::u32string current = DecodeUtf8(text);
  for (int pass = 0; pass < kMaxPasses; ++pass) {
    std::u32string next = NormalizePunctuation(ToNfc(current), table);
    next = profile == LangProfile::kEthiopic ? FoldHomophones(next, table)
                                             : LowercaseLatin(next);
    if (next == current) return EncodeUtf8(next);
    current = std::move(next);
  }
  throw ConfigError("normalization does not converge");
}

}  // namespace forge
