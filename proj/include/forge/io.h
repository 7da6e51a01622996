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

#ifndef FORGE_IO_H_
#define FORGE_IO_H_

#include <istream>
#include <string>
#include <string_view>
#include <vector>

namespace forge {

std::string ReadFile(const std::string &path);
std::string ReadStream(std::istream &in);
void WriteFile(const std::string &path, std::string_view contents);

// Splits on '\n'; a trailing '\r' on each line is dropped. A final empty
// line (file ending in '\n') is not reported.
std::vector<std::string> SplitLines(std::string_view contents);
std::vector<std::string> ReadLines(const std::string &path);

// Joins lines with '\n', including a terminating '\n' when non-empty.
std::string JoinLines(const std::vector<std::string> &lines);

std::vector<std::string> SplitTabs(std::string_view line);

// A data-file row together with its 1-based line number.
struct TableRow {
  size_t line_number = 0;
  std::vector<std::string> cells;
};

// Reads a tab-separated data file. Blank lines and lines starting with '#'
// are skipped. Cells are unescaped: \s (space), \t, \n, \\ and \uXXXX /
// \UXXXXXXXX.
std::vector<TableRow> ReadTableFile(const std::string &path);
std::vector<TableRow> ParseTable(std::string_view contents);

std::string UnescapeCell(std::string_view cell);

}  // namespace forge

#endif  // FORGE_IO_H_
