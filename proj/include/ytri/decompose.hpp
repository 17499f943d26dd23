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

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ytri/chain.hpp"
#include "ytri/error.hpp"

namespace ytri {

/// Which elimination scheme produced a chain.
enum class TheoremTag {
  T1_type11,    // type (1,1): one shear plus a terminal factor
  T4_deltaM1,   // delta-map of type (m,1): m shears plus a terminal factor
  C1_deltaMM,   // delta-map p_m y^m + p_1 y + p_0 in both components
  T5_deltaLMM,  // delta-map sum_l p_lm y^lm + p_1 y + p_0 ; q_m y^m + q_0
};

std::string_view theoremName(TheoremTag tag);

struct ProportionalityResult {
  /// c with p^h = c q^k as an exact polynomial identity.
  std::optional<Rational> constant;
  /// Whether h p' q - k q' p vanishes identically.
  bool relationHolds = false;
};

/// Throws Error(NoConstant) when q is zero but p is not.
ProportionalityResult proportionality(const UniPoly& p, const UniPoly& q, int h, int k);

/// c_l with p = c_l q^l, if it exists.
std::optional<Rational> proportionalityPower(const UniPoly& p, const UniPoly& q, int l);

struct DecompositionReport {
  Chain chain;
  TheoremTag theorem = TheoremTag::T1_type11;
  /// Elimination factors (shears), all triangular.
  int triangularCount = 0;
  /// The terminal factor. It is counted here even when it happens to be
  /// triangular itself; see allTriangular.
  int quasiTriangularCount = 0;
  /// composeChain(chain) equals the input exactly.
  bool verified = false;
  /// Every factor, terminal included, is triangular.
  bool allTriangular = false;
  /// F(0,0); the chain decomposes F itself, the offset is informational.
  Point offset;
  std::vector<std::string> steps;
};

/// Type (1,1), or the degenerate (0,1) / (1,0), non-singular on its strip.
DecompositionReport decomposeType11(const PlanarMap& map);
/// Non-singular delta-map of type (m,1), m >= 0.
DecompositionReport decomposeDeltaM1(const PlanarMap& map);
/// Non-singular delta-map whose components only carry y^0, y^1, y^m, m >= 2.
DecompositionReport decomposeDeltaMM(const PlanarMap& map);
/// Non-singular delta-map (sum_l p_lm y^lm + p_1 y + p_0, q_m y^m + q_0).
DecompositionReport decomposeDeltaLMM(const PlanarMap& map);

struct ShapeDiagnosis {
  TheoremTag theorem;
  ErrorCode code;
  std::string reason;
};

class NotDecomposable : public Error {
 public:
  explicit NotDecomposable(std::vector<ShapeDiagnosis> diagnosis);

  const std::vector<ShapeDiagnosis>& diagnosis() const noexcept { return diagnosis_; }

 private:
  std::vector<ShapeDiagnosis> diagnosis_;
};

/// Tries T1, T4, C1, T5 in that order; throws NotDecomposable listing the
/// failed hypothesis of every route when none applies.
DecompositionReport decomposeDispatch(const PlanarMap& map);

}  // namespace ytri
