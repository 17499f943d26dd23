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
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "ytri/inverse.hpp"
#include "ytri/mapalg.hpp"

namespace ytri {

inline constexpr std::string_view kToolVersion = "0.1.0";

enum class ReportFormat { Text, Tree };

/// Exit codes of runCommand.
inline constexpr int kExitSuccess = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitInconclusive = 2;
inline constexpr int kExitInternal = 3;

struct RunOptions {
  std::optional<Point> at;
  std::uint64_t budget = 10000;
  std::uint64_t seed = 0;
  int toleranceBits = kDefaultToleranceBits;
  bool assumeNonSingular = false;
  bool timing = true;
};

struct CommandResult {
  nlohmann::ordered_json report;
  int exitCode = kExitSuccess;
};

/// classify | decompose | invert | check-injectivity | eval | verify-chain.
/// Never throws for bad input; errors become an "error" section and exit 1.
CommandResult runCommand(std::string_view command, std::string_view source, const RunOptions& options);

/// Text: indented "key: value" lines. Tree: the same tree as JSON.
std::string renderReport(const nlohmann::ordered_json& report, ReportFormat format);

}  // namespace ytri
