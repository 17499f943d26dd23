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
// ytri: command-line front end for the planar map engine.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ytri/error.hpp"
#include "ytri/parse.hpp"
#include "ytri/report.hpp"

namespace fs = std::filesystem;

namespace {

struct Invocation {
  std::string command;
  std::string map;
  std::string at;
  ytri::RunOptions options;
  std::string format = "text";
  bool noTiming = false;
  std::string fixtures;
  std::string checkFixtures;
};

/// One case of the fixture corpus: "key: value" lines for command, map and
/// optional args; '#' starts a comment line.
struct FixtureCase {
  std::string command;
  std::string map;
  std::vector<std::string> args;
};

std::string trim(std::string s) {
  const auto notSpace = [](unsigned char c) { return !std::isspace(c); };
  s.erase(s.begin(), std::find_if(s.begin(), s.end(), notSpace));
  s.erase(std::find_if(s.rbegin(), s.rend(), notSpace).base(), s.end());
  return s;
}

FixtureCase readFixture(const fs::path& path) {
  std::ifstream in(path);
  FixtureCase fc;
  std::string line;
  while (std::getline(in, line)) {
    line = trim(line);
    if (line.empty() || line.front() == '#') continue;
    const auto colon = line.find(':');
    if (colon == std::string::npos) throw std::runtime_error(path.string() + ": expected 'key: value'");
    const std::string key = trim(line.substr(0, colon));
    const std::string value = trim(line.substr(colon + 1));
    if (key == "command") {
      fc.command = value;
    } else if (key == "map") {
      fc.map = value;
    } else if (key == "args") {
      std::istringstream words(value);
      for (std::string w; words >> w;) fc.args.push_back(w);
    } else {
      throw std::runtime_error(path.string() + ": unknown key '" + key + "'");
    }
  }
  if (fc.command.empty() || fc.map.empty()) throw std::runtime_error(path.string() + ": command and map required");
  return fc;
}

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

std::string fixtureOutput(const FixtureCase& fc) {
  std::vector<std::string> args{fc.command, fc.map, "--no-timing"};
  args.insert(args.end(), fc.args.begin(), fc.args.end());
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(args, out, err);
  return out.str() + err.str() + "exit: " + std::to_string(code) + "\n";
}

std::vector<fs::path> fixtureFiles(const fs::path& dir) {
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.path().extension() == ".cmd") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  return files;
}

int writeFixtures(const fs::path& dir, std::ostream& out) {
  for (const auto& cmd : fixtureFiles(dir)) {
    fs::path expected = cmd;
    expected.replace_extension(".expected");
    std::ofstream(expected) << fixtureOutput(readFixture(cmd));
    out << "wrote " << expected.filename().string() << '\n';
  }
  return 0;
}

int checkFixtures(const fs::path& dir, std::ostream& out) {
  int failures = 0;
  const auto files = fixtureFiles(dir);
  for (const auto& cmd : files) {
    fs::path expectedPath = cmd;
    expectedPath.replace_extension(".expected");
    std::ifstream in(expectedPath);
    std::stringstream expected;
    expected << in.rdbuf();
    const std::string actual = fixtureOutput(readFixture(cmd));
    if (!in || expected.str() != actual) {
      ++failures;
      out << "MISMATCH " << cmd.stem().string() << "\n--- expected\n" << expected.str() << "--- actual\n" << actual;
    } else {
      out << "ok " << cmd.stem().string() << '\n';
    }
  }
  out << files.size() - static_cast<std::size_t>(failures) << "/" << files.size() << " fixtures match\n";
  return failures == 0 && !files.empty() ? 0 : 1;
}

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  Invocation inv;
  CLI::App app{"Exact classification, decomposition, inversion and injectivity checks for planar maps "
               "polynomial in y.",
               "ytri"};
  app.set_version_flag("--version", std::string(ytri::kToolVersion));
  app.add_option("command", inv.command, "classify | decompose | invert | check-injectivity | eval | verify-chain")
      ->check(CLI::IsMember({"classify", "decompose", "invert", "check-injectivity", "eval", "verify-chain"}));
  app.add_option("map", inv.map, "\"P ; Q [on (a, b)]\"");
  app.add_option("--at", inv.at, "point u,v for eval");
  app.add_option("--budget", inv.options.budget, "falsifier sample count (0 disables it)");
  app.add_option("--seed", inv.options.seed, "falsifier seed");
  app.add_option("--tolerance-bits", inv.options.toleranceBits, "inverse tolerance 2^-k")
      ->check(CLI::Range(1, 4096));
  app.add_option("--format", inv.format, "text or tree")->check(CLI::IsMember({"text", "tree"}));
  app.add_flag("--assume-nonsingular", inv.options.assumeNonSingular,
               "trust that d_F has no zero on the strip when it cannot be certified");
  app.add_flag("--no-timing", inv.noTiming, "omit timing_ms from the report");
  app.add_option("--fixtures", inv.fixtures, "regenerate NAME.expected for every NAME.cmd in DIR");
  app.add_option("--check-fixtures", inv.checkFixtures, "compare every NAME.cmd in DIR against NAME.expected");

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : ytri::kExitInputError;
  }
  try {
    if (!inv.fixtures.empty()) return writeFixtures(inv.fixtures, out);
    if (!inv.checkFixtures.empty()) return checkFixtures(inv.checkFixtures, out);
  } catch (const std::exception& e) {
    err << "fixtures: " << e.what() << '\n';
    return ytri::kExitInputError;
  }
  if (inv.command.empty() || inv.map.empty()) {
    err << "usage: ytri <command> \"P ; Q [on (a, b)]\" [options]; see --help\n";
    return ytri::kExitInputError;
  }
  inv.options.timing = !inv.noTiming;
  const ytri::ReportFormat format = inv.format == "tree" ? ytri::ReportFormat::Tree : ytri::ReportFormat::Text;
  if (!inv.at.empty()) {
    try {
      inv.options.at = ytri::parsePoint(inv.at);
    } catch (const ytri::Error& e) {
      err << "--at: " << e.what() << '\n';
      return ytri::kExitInputError;
    }
  }
  const ytri::CommandResult result = ytri::runCommand(inv.command, inv.map, inv.options);
  out << ytri::renderReport(result.report, format);
  return result.exitCode;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(std::move(args), std::cout, std::cerr);
}
