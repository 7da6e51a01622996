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

#include "forge/io.h"

#include <fstream>
#include <sstream>

#include "forge/error.h"
#include "forge/unicode.h"

namespace forge {

std::string ReadFile(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  return ReadStream(in);
}

std::string ReadStream(std::istream &in) {
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void WriteFile(const std::string &path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write " + path);
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  if (!out) throw Error("write failed: " + path);
}

std::vector<std::string> SplitLines(std::string_view contents) {
  std::vector<std::string> lines;
  size_t start = 0;
  while (start < contents.size()) {
    size_t end = contents.find('\n', start);
    if (end == std::string_view::npos) end = contents.size();
    std::string_view line = contents.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.emplace_back(line);
    start = end + 1;
  }
  return lines;
}

std::vector<std::string> ReadLines(const std::string &path) {
  return SplitLines(ReadFile(path));
}

std::string JoinLines(const std::vector<std::string> &lines) {
  std::string out;
  for (const std::string &line : lines) {
    out += line;
    out.push_back('\n');
  }
  return out;
}

std::vector<std::string> SplitTabs(std::string_view line) {
  std::vector<std::string> cells;
  size_t start = 0;
  while (true) {
    size_t tab = line.find('\t', start);
    if (tab == std::string_view::npos) {
      cells.emplace_back(line.substr(start));
      return cells;
    }
    cells.emplace_back(line.substr(start, tab - start));
    start = tab + 1;
  }
}

namespace {

int HexValue(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

}  // namespace

std::string UnescapeCell(std::string_view cell) {
  std::string out;
  for (size_t i = 0; i < cell.size(); ++i) {
    if (cell[i] != '\\' || i + 1 == cell.size()) {
      out.push_back(cell[i]);
      continue;
    }
    const char kind = cell[++i];
    switch (kind) {
      case 's': out.push_back(' '); break;
      case 't': out.push_back('\t'); break;
      case 'n': out.push_back('\n'); break;
      case '\\': out.push_back('\\'); break;
      case 'u':
      case 'U': {
        const size_t digits = kind == 'u' ? 4 : 8;
        if (i + digits >= cell.size()) {
          throw ConfigError("truncated escape in table cell: " +
                            std::string(cell));
        }
        char32_t cp = 0;
        for (size_t k = 1; k <= digits; ++k) {
          const int v = HexValue(cell[i + k]);
          if (v < 0) {
            throw ConfigError("bad hex escape in table cell: " +
                              std::string(cell));
          }
          cp = cp * 16 + static_cast<char32_t>(v);
        }
        AppendUtf8(cp, &out);
        i += digits;
        break;
      }
      default:
        out.push_back('\\');
        out.push_back(kind);
    }
  }
  return out;
}

std::vector<TableRow> ParseTable(std::string_view contents) {
  std::vector<TableRow> rows;
  const std::vector<std::string> lines = SplitLines(contents);
  for (size_t n = 0; n < lines.size(); ++n) {
    const std::string &line = lines[n];
    if (line.empty() || line[0] == '#') continue;
    if (Trim(line).empty()) continue;
    TableRow row;
    row.line_number = n + 1;
    for (const std::string &cell : SplitTabs(line)) {
      row.cells.push_back(UnescapeCell(cell));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<TableRow> ReadTableFile(const std::string &path) {
  return ParseTable(ReadFile(path));
}

}  // namespace forge
