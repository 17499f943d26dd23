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
#include <variant>

#include "ytri/poly.hpp"
#include "ytri/realroots.hpp"

namespace ytri {

struct Point {
  Rational x;
  Rational y;

  friend bool operator==(const Point& a, const Point& b) = default;
};

std::string toString(const Point& p);

/// F(x, y) = (P(x, y), Q(x, y)) on the strip I x R.
struct PlanarMap {
  BiPoly P;
  BiPoly Q;
  Interval strip;

  friend bool operator==(const PlanarMap& a, const PlanarMap& b) = default;
};

/// "P ; Q on (a, b)", reparseable.
std::string toString(const PlanarMap& map);

/// y-degrees of the two components; y-free components (including zero)
/// report 0.
struct MapType {
  int m = 0;
  int n = 0;

  friend bool operator==(const MapType& a, const MapType& b) = default;
};

MapType mapType(const PlanarMap& map);

/// P_x Q_y - P_y Q_x.
BiPoly jacobianDet(const PlanarMap& map);

/// outer o inner, keeping the inner strip.
PlanarMap compose(const PlanarMap& outer, const PlanarMap& inner);

/// Exact image. Throws Error(OutsideStrip) when x is not inside the strip.
Point evalMap(const PlanarMap& map, const Point& at);

/// Axis-aligned rational box containing a point where the Jacobian
/// determinant vanishes. Degenerate sides mean the coordinate is exact.
struct WitnessBox {
  Rational xLower;
  Rational xUpper;
  Rational yLower;
  Rational yUpper;

  bool isExactPoint() const { return xLower == xUpper && yLower == yUpper; }
};

struct NonSingular {
  std::string certificate;
};
struct Singular {
  WitnessBox witness;
  std::string detail;
};
struct UnknownSingularity {
  std::string reason;
};
using NonSingularity = std::variant<NonSingular, Singular, UnknownSingularity>;

struct Classification {
  MapType type;
  BiPoly dF;
  bool isDeltaMap = false;
  std::optional<UniPoly> delta;
  bool isJacobianMap = false;
  NonSingularity nonSingularity;

  bool nonSingularCertified() const { return std::holds_alternative<NonSingular>(nonSingularity); }
  bool singular() const { return std::holds_alternative<Singular>(nonSingularity); }
};

/// Type, determinant, delta/Jacobian flags and a non-singularity decision:
/// exact for delta-maps, a certified witness when d_F has odd y-degree or a
/// sampled fibre d_F(x0, .) has a real root, Unknown otherwise.
Classification classify(const PlanarMap& map);

/// d1m = p1 qm - q1 pm and d1m* = p1' qm - q1' pm, m = max y-degree.
struct LeadingPairData {
  int m = 0;
  UniPoly d1m;
  UniPoly d1mStar;
};

/// Throws Error(NoLeadingPair) when both components are y-free.
LeadingPairData leadingPairData(const PlanarMap& map);

}  // namespace ytri
