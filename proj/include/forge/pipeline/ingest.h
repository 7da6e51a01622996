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

// Document ingestion: markup stripping and boilerplate removal.
//
// Rule files are tab separated, "<action>\t<regex>", with actions
//
//   drop_line     drop every line the pattern matches anywhere
//   strip_prefix  remove a match anchored at the start of the line
//   strip         remove every match
//
// Patterns use ECMAScript syntax and match UTF-8 bytes.

#ifndef FORGE_PIPELINE_INGEST_H_
#define FORGE_PIPELINE_INGEST_H_

#include <regex>
#include <string>
#include <string_view>
#include <vector>

namespace forge {

enum class BoilerplateAction { kDropLine, kStripPrefix, kStrip };

struct BoilerplateRule {
  BoilerplateAction action = BoilerplateAction::kDropLine;
  std::string pattern;
  std::regex regex;
};

using BoilerplateRules = std::vector<BoilerplateRule>;

// Throws ConfigError on an unknown action or a bad pattern.
BoilerplateRules ParseBoilerplateRules(std::string_view contents);
BoilerplateRules LoadBoilerplateRules(const std::string &path);

// Removes comments, tags, and the contents of script and style elements.
// Block-level tags end the current line. Character entities are decoded.
std::string StripTags(std::string_view text);

// Applies the rules line by line. Lines emptied by a rule are dropped.
std::string ApplyBoilerplateRules(std::string_view text,
                                  const BoilerplateRules &rules);

struct IngestStats {
  size_t lines_in = 0;
  size_t lines_dropped = 0;
};

// Validates UTF-8 (DecodeError with the byte offset), strips markup and
// applies the rules. Lines left blank by tag removal are dropped; plain
// lines without a matching rule come back unchanged.
std::string StripMarkup(std::string_view raw, const BoilerplateRules &rules,
                        IngestStats *stats = nullptr);

}  // namespace forge

#endif  // FORGE_PIPELINE_INGEST_H_
