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

#include "forge/pipeline/ingest.h"

#include <algorithm>
#include <cctype>
#include <cstdlib>

#include "forge/error.h"
#include "forge/io.h"
#include "forge/unicode.h"

namespace forge {
namespace {

const char *const kBlockTags[] = {
    "address", "article", "aside", "blockquote", "br", "dd", "div", "dl",
    "dt", "footer", "h1", "h2", "h3", "h4", "h5", "h6", "header", "hr",
    "li", "main", "nav", "ol", "p", "pre", "section", "table", "td", "th",
    "title", "tr", "ul"};

std::string LowerAscii(std::string_view s) {
  std::string out(s);
  for (char &c : out) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
  return out;
}

// Tag name of "<...>" contents, without a leading '/'.
std::string TagName(std::string_view inner) {
  size_t i = 0;
  if (i < inner.size() && inner[i] == '/') ++i;
  size_t j = i;
  while (j < inner.size() && (std::isalnum(static_cast<unsigned char>(inner[j])))) ++j;
  return LowerAscii(inner.substr(i, j - i));
}

bool IsBlockTag(const std::string &name) {
  return std::find(std::begin(kBlockTags), std::end(kBlockTags), name) !=
         std::end(kBlockTags);
}

// Decodes the entity starting at text[pos] == '&'. Returns the number of
// bytes consumed, or 0 when it is not a recognized entity.
size_t DecodeEntity(std::string_view text, size_t pos, std::string *out) {
  const size_t semi = text.find(';', pos);
  if (semi == std::string_view::npos || semi - pos > 12) return 0;
  const std::string_view name = text.substr(pos + 1, semi - pos - 1);
  char32_t cp = 0;
  if (name == "amp") {
    cp = '&';
  } else if (name == "lt") {
    cp = '<';
  } else if (name == "gt") {
    cp = '>';
  } else if (name == "quot") {
    cp = '"';
  } else if (name == "apos") {
    cp = '\'';
  } else if (name == "nbsp") {
    cp = 0xA0;
  } else if (name.size() >= 2 && name[0] == '#') {
    const bool hex = name[1] == 'x' || name[1] == 'X';
    const std::string digits(name.substr(hex ? 2 : 1));
    if (digits.empty()) return 0;
    char *end = nullptr;
    const unsigned long value = std::strtoul(digits.c_str(), &end, hex ? 16 : 10);
    if (*end != '\0' || value == 0 || value > 0x10FFFF ||
        (value >= 0xD800 && value <= 0xDFFF)) {
      return 0;
    }
    cp = static_cast<char32_t>(value);
  } else {
    return 0;
  }
  AppendUtf8(cp, out);
  return semi - pos + 1;
}

bool IsBlank(std::string_view line) {
  return std::all_of(line.begin(), line.end(), [](char c) {
    return c == ' ' || c == '\t' || c == '\r' || c == '\f' || c == '\v';
  });
}

}  // namespace

BoilerplateRules ParseBoilerplateRules(std::string_view contents) {
  BoilerplateRules rules;
  for (const TableRow &row : ParseTable(contents)) {
    const std::string where = "boilerplate rule line " + std::to_string(row.line_number);
    if (row.cells.size() != 2) throw ConfigError(where + ": expected action<TAB>regex");
    BoilerplateRule rule;
    if (row.cells[0] == "drop_line") {
      rule.action = BoilerplateAction::kDropLine;
    } else if (row.cells[0] == "strip_prefix") {
      rule.action = BoilerplateAction::kStripPrefix;
    } else if (row.cells[0] == "strip") {
      rule.action = BoilerplateAction::kStrip;
    } else {
      throw ConfigError(where + ": unknown action '" + row.cells[0] + "'");
    }
    rule.pattern = row.cells[1];
    try {
      rule.regex = std::regex(rule.pattern, std::regex::ECMAScript);
    } catch (const std::regex_error &e) {
      throw ConfigError(where + ": bad pattern: " + e.what());
    }
    rules.push_back(std::move(rule));
  }
  return rules;
}

BoilerplateRules LoadBoilerplateRules(const std::string &path) {
  return ParseBoilerplateRules(ReadFile(path));
}

std::string StripTags(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (c == '<') {
      if (text.compare(i, 4, "<!--") == 0) {
        const size_t end = text.find("-->", i + 4);
        i = end == std::string_view::npos ? text.size() : end + 3;
        continue;
      }
      const size_t close = text.find('>', i + 1);
      const bool looks_like_tag =
          i + 1 < text.size() &&
          (std::isalpha(static_cast<unsigned char>(text[i + 1])) ||
           text[i + 1] == '/' || text[i + 1] == '!' || text[i + 1] == '?');
      if (close == std::string_view::npos || !looks_like_tag) {
        out.push_back(c);
        ++i;
        continue;
      }
      const std::string_view inner = text.substr(i + 1, close - i - 1);
      const std::string name = TagName(inner);
      i = close + 1;
      if ((name == "script" || name == "style") && inner[0] != '/') {
        const std::string end_tag = "</" + name;
        size_t end = i;
        while (true) {
          end = text.find("</", end);
          if (end == std::string_view::npos) break;
          if (LowerAscii(text.substr(end, end_tag.size())) == end_tag) break;
          end += 2;
        }
        if (end == std::string_view::npos) {
          i = text.size();
        } else {
          const size_t gt = text.find('>', end);
          i = gt == std::string_view::npos ? text.size() : gt + 1;
        }
        continue;
      }
      if (IsBlockTag(name)) {
        out.push_back('\n');
      }
      continue;
    }
    if (c == '&') {
      const size_t used = DecodeEntity(text, i, &out);
      if (used > 0) {
        i += used;
        continue;
      }
    }
    out.push_back(c);
    ++i;
  }
  return out;
}

std::string ApplyBoilerplateRules(std::string_view text,
                                  const BoilerplateRules &rules) {
  std::vector<std::string> kept;
  for (std::string line : SplitLines(text)) {
    bool drop = false;
    bool changed = false;
    for (const BoilerplateRule &rule : rules) {
      switch (rule.action) {
        case BoilerplateAction::kDropLine:
          drop = std::regex_search(line, rule.regex);
          break;
        case BoilerplateAction::kStripPrefix: {
          std::smatch m;
          if (std::regex_search(line, m, rule.regex,
                                std::regex_constants::match_continuous) &&
              m.length(0) > 0) {
            line.erase(0, static_cast<size_t>(m.length(0)));
            changed = true;
          }
          break;
        }
        case BoilerplateAction::kStrip: {
          std::string stripped = std::regex_replace(line, rule.regex, "");
          if (stripped != line) {
            line = std::move(stripped);
            changed = true;
          }
          break;
        }
      }
      if (drop) break;
    }
    if (drop || (changed && IsBlank(line))) continue;
    kept.push_back(std::move(line));
  }
  return JoinLines(kept);
}

std::string StripMarkup(std::string_view raw, const BoilerplateRules &rules,
                        IngestStats *stats) {
  const size_t bad = FindInvalidUtf8(raw);
  if (bad != std::string_view::npos) throw DecodeError("invalid UTF-8", bad);

  const bool has_markup = raw.find('<') != std::string_view::npos ||
                          raw.find('&') != std::string_view::npos;
  std::string text;
  if (has_markup) {
    // Only lines that tag removal leaves blank are dropped here, so plain
    // text keeps its layout.
    std::vector<std::string> lines;
    for (const std::string &line : SplitLines(StripTags(raw))) {
      if (!IsBlank(line)) lines.push_back(CollapseWhitespace(line));
    }
    text = JoinLines(lines);
  } else {
    text = std::string(raw);
  }
  const size_t lines_in = SplitLines(text).size();
  std::string out = rules.empty() ? text : ApplyBoilerplateRules(text, rules);
  if (stats != nullptr) {
    stats->lines_in = lines_in;
    stats->lines_dropped = lines_in - SplitLines(out).size();
  }
  return out;
}

}  // namespace forge
