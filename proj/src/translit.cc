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

#include "forge/translit.h"

#include <cstdio>
#include <vector>

#include "forge/io.h"
#include "forge/unicode.h"

namespace forge {
namespace {

std::string CodepointLabel(char32_t cp) {
  char buf[16];
  snprintf(buf, sizeof(buf), "U+%04X", static_cast<unsigned>(cp));
  return buf;
}

}  // namespace

UnmappedCharacterError::UnmappedCharacterError(char32_t cp, size_t offset)
    : Error("unmapped Ethiopic character " + CodepointLabel(cp) + " (" +
            EncodeUtf8(std::u32string(1, cp)) + ") at offset " +
            std::to_string(offset)),
      codepoint_(cp),
      offset_(offset) {}

void TranslitTable::Add(char32_t ethiopic, std::u32string latin, size_t line) {
  const std::string where = "translit table line " + std::to_string(line);
  if (!IsEthiopic(ethiopic)) {
    throw ConfigError(where + ": key is not an Ethiopic codepoint");
  }
  if (latin.empty()) throw ConfigError(where + ": empty image");
  for (char32_t cp : latin) {
    if (SimpleLower(cp) != cp) throw ConfigError(where + ": image not lowercase");
  }
  if (!forward_.emplace(ethiopic, latin).second) {
    throw ConfigError(where + ": duplicate key " + CodepointLabel(ethiopic));
  }
  if (!reverse_.emplace(latin, ethiopic).second) {
    throw ConfigError(where + ": duplicate image '" + EncodeUtf8(latin) + "'");
  }
  for (size_t k = 1; k < latin.size(); ++k) prefixes_.insert(latin.substr(0, k));
  max_image_ = std::max(max_image_, latin.size());
}

// In sorted order a string that is a prefix of any later string is a prefix
// of its immediate successor.
void TranslitTable::CheckPrefixFree() const {
  const std::u32string *previous = nullptr;
  for (const auto &[image, cp] : reverse_) {
    if (previous != nullptr && image.compare(0, previous->size(), *previous) == 0) {
      throw ConfigError("translit images are not prefix-free: '" +
                        EncodeUtf8(*previous) + "' is a prefix of '" +
                        EncodeUtf8(image) + "'");
    }
    previous = &image;
  }
}

TranslitTable TranslitTable::Parse(std::string_view contents) {
  TranslitTable table;
  for (const TableRow &row : ParseTable(contents)) {
    if (row.cells.size() != 2) {
      throw ConfigError("translit table line " + std::to_string(row.line_number) +
                        ": expected ethiopic<TAB>latin");
    }
    const std::u32string key = DecodeUtf8(row.cells[0]);
    if (key.size() != 1) {
      throw ConfigError("translit table line " + std::to_string(row.line_number) +
                        ": key must be a single codepoint");
    }
    table.Add(key[0], DecodeUtf8(row.cells[1]), row.line_number);
  }
  table.CheckPrefixFree();
  return table;
}

TranslitTable TranslitTable::Load(const std::string &path) {
  return Parse(ReadFile(path));
}

std::string TranslitTable::DefaultPath() {
  return std::string(FORGE_DATA_DIR) + "/translit_am.tsv";
}

std::string TranslitTable::Romanize(std::string_view text) const {
  const std::u32string decoded = DecodeUtf8(text);
  std::u32string out;
  out.reserve(decoded.size() * 2);
  for (size_t i = 0; i < decoded.size(); ++i) {
    const char32_t cp = decoded[i];
    if (!IsEthiopic(cp)) {
      out.push_back(cp);
      continue;
    }
    auto it = forward_.find(cp);
    if (it == forward_.end()) throw UnmappedCharacterError(cp, i);
    out += it->second;
  }
  return EncodeUtf8(out);
}

std::string TranslitTable::Deromanize(std::string_view text) const {
  const std::u32string decoded = DecodeUtf8(text);
  std::u32string out;
  out.reserve(decoded.size());
  size_t i = 0;
  while (i < decoded.size()) {
    const size_t longest = std::min(max_image_, decoded.size() - i);
    bool matched = false;
    for (size_t len = longest; len > 0; --len) {
      auto it = reverse_.find(decoded.substr(i, len));
      if (it != reverse_.end()) {
        out.push_back(it->second);
        i += len;
        matched = true;
        break;
      }
    }
    if (matched) continue;
    if (prefixes_.count(decoded.substr(i, 1)) > 0) {
      throw DecodeError("undecodable romanized text", i);
    }
    out.push_back(decoded[i++]);
  }
  return EncodeUtf8(out);
}

}  // namespace forge
