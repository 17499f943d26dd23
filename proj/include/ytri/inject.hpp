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
#include <utility>
#include <variant>
#include <vector>

#include "ytri/mapalg.hpp"

namespace ytri {

/// Criteria the checker evaluates. L3iii is a necessary condition and can
/// only ever refute a non-singularity claim.
enum class Criterion { L3i, L3ii, L3iii, T2i, T2ii, T2iii, T2iv, T3, DecompositionChain };

std::string_view criterionName(Criterion criterion);

enum class Outcome {
  Certified,       // condition holds and non-singularity is certified or claimed
  ConditionHolds,  // condition holds but non-singularity is unknown
  Failed,
  Skipped,  // shape mismatch
  Contradiction,
};

std::string_view outcomeName(Outcome outcome);

struct CriterionResult {
  Criterion tag;
  Outcome outcome;
  std::string detail;
};

struct InjectiveCertified {
  Criterion criterion;
};

/// evalMap(F, a) == evalMap(F, b) with a != b.
struct NotInjective {
  Point a;
  Point b;
};

struct Inconclusive {
  std::vector<std::string> reasons;
};

using VerdictStatus = std::variant<InjectiveCertified, NotInjective, Inconclusive>;

struct InjectivityVerdict {
  VerdictStatus status;
  std::vector<CriterionResult> criteria;
  /// Samples drawn by the final falsifier run.
  std::uint64_t samples = 0;
};

struct CheckOptions {
  /// Caller asserts d_F has no zero on the strip when classify cannot decide.
  bool assumeNonSingular = false;
  std::uint64_t budget = 10000;
  std::uint64_t seed = 0;
};

/// Whether the criteria may rely on non-singularity, and why.
struct NonSingularBasis {
  bool usable = false;
  bool certified = false;
  std::string note;
};

NonSingularBasis nonSingularBasis(const Classification& classification, const CheckOptions& options);

std::vector<CriterionResult> checkLemma3(const PlanarMap& map, const Classification& classification,
                                         const CheckOptions& options);
std::vector<CriterionResult> checkTheorem2(const PlanarMap& map, const Classification& classification,
                                           const CheckOptions& options);
/// Shape (sum_{l=1}^L p_{2hl} y^{2hl} + p_1 y + p_0, q_{2h} y^{2h} + q_0).
std::vector<CriterionResult> checkTheoremL2h(const PlanarMap& map, const Classification& classification,
                                             const CheckOptions& options);

/// Randomized exact collision search. Deterministic in (map, budget, seed).
/// Throws Error(InvalidArgument) when budget is zero.
std::optional<std::pair<Point, Point>> falsify(const PlanarMap& map, std::uint64_t budget, std::uint64_t seed);

/// Exact collision on a fibre x = r where every y-coefficient vanishes.
std::optional<std::pair<Point, Point>> fibreCollapseWitness(const PlanarMap& map);

/// Classification, witness search for singular maps, the criteria, the
/// decomposition route and finally the falsifier. Throws
/// Error(InternalContradiction) if a certified map has a collision.
InjectivityVerdict checkInjectivity(const PlanarMap& map, const CheckOptions& options = {});

}  // namespace ytri
