// Copyright 2026 The ytri Authors
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
#include <gtest/gtest.h>

#include "ytri/report.hpp"

namespace ytri {
namespace {

RunOptions quiet() {
  RunOptions o;
  o.timing = false;
  return o;
}

TEST(Report, Envelope) {
  const CommandResult r = runCommand("classify", "x + y ; y", quiet());
  EXPECT_EQ(r.exitCode, kExitSuccess);
  EXPECT_EQ(r.report["command"], "classify");
  EXPECT_EQ(r.report["tool_version"], std::string(kToolVersion));
  EXPECT_EQ(r.report["input"], "y + x ; y");
  EXPECT_FALSE(r.report.contains("timing_ms"));
  EXPECT_EQ(r.report["result"]["type"], "(1,1)");
  EXPECT_EQ(r.report["result"]["jacobian_map"], true);
  RunOptions timed;
  EXPECT_TRUE(runCommand("classify", "x ; y", timed).report.contains("timing_ms"));
}

TEST(Report, InputErrors) {
  for (const auto& [command, source] : std::vector<std::pair<std::string, std::string>>{
           {"classify", "x ; y^"}, {"eval", "x ; y"}, {"nonsense", "x ; y"}, {"decompose", "x ; y on (1, 0)"}}) {
    const CommandResult r = runCommand(command, source, quiet());
    EXPECT_EQ(r.exitCode, kExitInputError) << command << " " << source;
    EXPECT_TRUE(r.report.contains("error"));
    EXPECT_FALSE(r.report.contains("result"));
  }
  EXPECT_EQ(runCommand("classify", "x ; y^", quiet()).report["error"]["code"], "parse_error");
}

TEST(Report, DecomposeAndVerifyChain) {
  const CommandResult d = runCommand("decompose", "(x^2+1)*y + 2*x ; (x^2+1)*y + x", quiet());
  EXPECT_EQ(d.exitCode, kExitSuccess);
  EXPECT_EQ(d.report["result"]["chain"]["theorem"], "T1_type11");
  const CommandResult v = runCommand("verify-chain", "(x^2+1)*y + 2*x ; (x^2+1)*y + x", quiet());
  EXPECT_EQ(v.report["result"]["recomposition_equal"], true);
  const CommandResult bad = runCommand("decompose", "x + y + x^2 ; x^2*y + y + x", quiet());
  EXPECT_EQ(bad.exitCode, kExitInconclusive);
  EXPECT_EQ(bad.report["result"]["status"], "not-decomposable");
  EXPECT_EQ(bad.report["result"]["diagnosis"].size(), 4U);
}

TEST(Report, InjectivityExitCodes) {
  RunOptions o = quiet();
  o.budget = 1000;
  o.seed = 7;
  EXPECT_EQ(runCommand("check-injectivity", "x + y ; y", o).exitCode, kExitSuccess);
  const CommandResult w = runCommand("check-injectivity", "x ; y^2", o);
  EXPECT_EQ(w.exitCode, kExitSuccess);
  EXPECT_EQ(w.report["result"]["status"], "not-injective");
  const CommandResult i = runCommand("check-injectivity", "x^3*y^2 + x ; x^3*y^2 + x + y", o);
  EXPECT_EQ(i.exitCode, kExitInconclusive);
  EXPECT_EQ(i.report["result"]["status"], "inconclusive");
  EXPECT_FALSE(i.report["result"]["reasons"].empty());
}

TEST(Report, EvalAndInvert) {
  RunOptions o = quiet();
  o.at = Point{1, 2};
  const CommandResult e = runCommand("eval", "x + y ; y", o);
  EXPECT_EQ(e.report["result"]["image"], "(3, 2)");
  const CommandResult inv = runCommand("invert", "x + y ; y", quiet());
  EXPECT_EQ(inv.report["result"]["form"], "explicit");
  EXPECT_EQ(inv.report["result"]["inverse"], "-y + x ; y");
  const CommandResult ev = runCommand("invert", "x^2 ; x^2*y on (0, inf)", o);
  EXPECT_EQ(ev.exitCode, kExitSuccess);
  EXPECT_EQ(ev.report["result"]["form"], "evaluable");
}

TEST(Report, DeterministicWithoutTiming) {
  RunOptions o = quiet();
  o.budget = 2000;
  o.seed = 3;
  for (const char* command : {"classify", "decompose", "check-injectivity", "verify-chain", "invert"}) {
    const std::string a = renderReport(runCommand(command, "x^3*y^2 + x ; x^3*y^2 + x + y", o).report, ReportFormat::Text);
    const std::string b = renderReport(runCommand(command, "x^3*y^2 + x ; x^3*y^2 + x + y", o).report, ReportFormat::Text);
    EXPECT_EQ(a, b) << command;
  }
}

TEST(Report, TreeRoundTripsAsJson) {
  const CommandResult r = runCommand("classify", "x^2 ; x^2*y on (0, inf)", quiet());
  const std::string tree = renderReport(r.report, ReportFormat::Tree);
  EXPECT_EQ(nlohmann::ordered_json::parse(tree), r.report);
  const std::string text = renderReport(r.report, ReportFormat::Text);
  EXPECT_EQ(text.rfind("command: classify\n", 0), 0U);
  EXPECT_NE(text.find("\n  type: "), std::string::npos);
}

}  // namespace
}  // namespace ytri
