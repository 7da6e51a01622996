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


// Drives the forge binary through the shell.

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <string>

#include "forge/io.h"
#include "json.hpp"

namespace forge {
namespace {

namespace fs = std::filesystem;

struct CliResult {
  int status = -1;
  std::string out;
};

std::string Scratch(const std::string &name) {
  return (fs::path(testing::TempDir()) / ("forge_cli_" + name)).string();
}

// Runs `forge <args>` with stdin taken from `input`; stderr is discarded.
CliResult Forge(const std::string &args, const std::string &input = "") {
  const std::string in_path = Scratch("stdin.txt");
  WriteFile(in_path, input);
  const std::string cmd = std::string("'") + FORGE_BINARY + "' " + args + " < '" +
                          in_path + "' 2>/dev/null";
  CliResult result;
  FILE *pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return result;
  std::array<char, 4096> buf;
  size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) result.out.append(buf.data(), n);
  const int status = pclose(pipe);
  result.status = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

TEST(CliTest, NormalizeFoldsVariants) {
  const CliResult r = Forge("normalize --lang am", "ሰላም ዓለም፡፡\n");
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "ሰላም ኣለም።\n");
}

TEST(CliTest, SegmentKeepsAbbreviations) {
  const CliResult r = Forge("segment --lang en", "Mr. Smith went home. He slept.\n");
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "Mr. Smith went home.\nHe slept.\n");
}

TEST(CliTest, TranslitRoundTrip) {
  const CliResult latin = Forge("translit --to-latin", "ሰላም ኣለም።\n");
  EXPECT_EQ(latin.status, 0);
  const CliResult back = Forge("translit --to-ethiopic", latin.out);
  EXPECT_EQ(back.out, "ሰላም ኣለም።\n");
}

TEST(CliTest, TranslitRejectsUnnormalizedInput) {
  EXPECT_EQ(Forge("translit --to-latin", "ዓለም\n").status, 1);
}

TEST(CliTest, BpeLearnApplyUndo) {
  const CliResult codes =
      Forge("bpe learn --merges 3", "low lower newest widest\nnewest widest\n");
  EXPECT_EQ(codes.status, 0);
  EXPECT_EQ(codes.out, "e s\nes t\nest </w>\n");
  const std::string codes_path = Scratch("codes.txt");
  WriteFile(codes_path, codes.out);
  const CliResult applied = Forge("bpe apply --codes '" + codes_path + "'", "lowest\n");
  EXPECT_EQ(applied.out, "l o w est</w>\n");
  EXPECT_EQ(Forge("bpe undo", applied.out).out, "lowest\n");
}

TEST(CliTest, ScoreJson) {
  const std::string hyp = Scratch("hyp.txt");
  const std::string ref = Scratch("ref.txt");
  WriteFile(hyp, "the cat sat on the mat\n");
  WriteFile(ref, "the cat sat on the mat\n");
  const CliResult bleu = Forge("score --metric bleu --json --hyp '" + hyp +
                               "' --ref '" + ref + "'");
  ASSERT_EQ(bleu.status, 0);
  const auto report = nlohmann::json::parse(bleu.out);
  EXPECT_EQ(report["score"].get<double>(), 100.0);
  EXPECT_EQ(report["precisions"].size(), 4u);
  const CliResult ter = Forge("score --metric character --json --hyp '" + hyp +
                              "' --ref '" + ref + "'");
  EXPECT_EQ(nlohmann::json::parse(ter.out)["score"].get<double>(), 0.0);
}

TEST(CliTest, CleanReportsCounts) {
  const std::string report = Scratch("clean.json");
  const CliResult r = Forge("clean --report '" + report + "'",
                            "a b\tc d\n\tx\none\ttwo three\n");
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "a b\tc d\none\ttwo three\n");
  const auto counts = nlohmann::json::parse(ReadFile(report));
  EXPECT_EQ(counts["kept"].get<int>(), 2);
  EXPECT_EQ(counts["rejected_empty"].get<int>(), 1);
}

TEST(CliTest, RunTwiceGivesSameManifest) {
  const std::string config = std::string(FORGE_TEST_DIR) + "/fixtures/corpus/config.json";
  fs::remove_all(Scratch("run1"));
  fs::remove_all(Scratch("run2"));
  const CliResult a = Forge("run --config '" + config + "' --out '" + Scratch("run1") + "'");
  const CliResult b = Forge("run --config '" + config + "' --out '" + Scratch("run2") + "'");
  ASSERT_EQ(a.status, 0);
  ASSERT_EQ(b.status, 0);
  const std::string hash_a = a.out.substr(a.out.rfind('\t') + 1);
  EXPECT_EQ(hash_a, b.out.substr(b.out.rfind('\t') + 1));
  EXPECT_EQ(ReadFile(Scratch("run1") + "/manifest.json"),
            ReadFile(Scratch("run2") + "/manifest.json"));
}

TEST(CliTest, ErrorsExitNonZero) {
  EXPECT_EQ(Forge("run --config /nonexistent/config.json").status, 1);
  EXPECT_NE(Forge("vocab --top-k 0", "x\n").status, 0);
  EXPECT_NE(Forge("translit --to-latin --to-ethiopic").status, 0);
  EXPECT_NE(Forge("frobnicate").status, 0);
}

}  // namespace
}  // namespace forge
