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
#include "ytri/mapalg.hpp"

#include <algorithm>

#include "ytri/error.hpp"

namespace ytri {
namespace {

constexpr int kFibreSamples = 16;

/// Box around the first real root of a univariate polynomial in y at fixed
/// x0; exact when that root is rational.
std::optional<WitnessBox> fibreWitness(const UniPoly& inY, const Rational& x0) {
  if (inY.isZero()) return WitnessBox{x0, x0, 0, 0};
  const auto roots = isolateRoots(inY, Interval::real());
  if (roots.empty()) return std::nullopt;
  const auto exact = rationalRoots(inY, Interval::real());
  if (!exact.empty()) return WitnessBox{x0, x0, exact.front(), exact.front()};
  return WitnessBox{x0, x0, roots.front().lower, roots.front().upper};
}

}  // namespace

std::string toString(const Point& p) { return "(" + toString(p.x) + ", " + toString(p.y) + ")"; }

std::string toString(const PlanarMap& map) {
  std::string out = toString(map.P) + " ; " + toString(map.Q);
  if (map.strip != Interval::real()) out += " on " + toString(map.strip);
  return out;
}

MapType mapType(const PlanarMap& map) {
  return {std::max(map.P.yDegree(), 0), std::max(map.Q.yDegree(), 0)};
}

BiPoly jacobianDet(const PlanarMap& map) {
  return map.P.derivative(Var::X) * map.Q.derivative(Var::Y) -
         map.P.derivative(Var::Y) * map.Q.derivative(Var::X);
}

PlanarMap compose(const PlanarMap& outer, const PlanarMap& inner) {
  return {substitute(outer.P, inner.P, inner.Q), substitute(outer.Q, inner.P, inner.Q), inner.strip};
}

Point evalMap(const PlanarMap& map, const Point& at) {
  if (!map.strip.contains(at.x)) {
    throw Error(ErrorCode::OutsideStrip,
                "point " + toString(at) + " lies outside the strip " + toString(map.strip));
  }
  return {map.P(at.x, at.y), map.Q(at.x, at.y)};
}

Classification classify(const PlanarMap& map) {
  Classification c;
  c.type = mapType(map);
  c.dF = jacobianDet(map);
  c.isDeltaMap = c.dF.yDegree() <= 0;
  const Interval& strip = map.strip;

  if (c.isDeltaMap) {
    const UniPoly delta = c.dF.coeff(0);
    c.delta = delta;
    c.isJacobianMap = delta.degree() == 0;
    if (delta.isZero()) {
      const Rational x0 = pointInside(strip);
      c.nonSingularity = Singular{{x0, x0, 0, 0}, "d_F vanishes identically"};
      return c;
    }
    const auto roots = isolateRoots(delta, strip);
    if (roots.empty()) {
      c.nonSingularity = NonSingular{"delta = " + toString(delta) + " has no real root on " +
                                     toString(strip) + " (Sturm count 0)"};
      return c;
    }
    const auto exact = rationalRoots(delta, strip);
    WitnessBox box = exact.empty() ? WitnessBox{roots.front().lower, roots.front().upper, 0, 0}
                                   : WitnessBox{exact.front(), exact.front(), 0, 0};
    c.nonSingularity =
        Singular{box, "delta = " + toString(delta) + " has " + std::to_string(roots.size()) +
                          " real root(s) on " + toString(strip) + "; any y"};
    return c;
  }

  const int ydeg = c.dF.yDegree();
  if (ydeg % 2 == 1) {
    const UniPoly& lead = c.dF.lead();
    for (int i = 0;; ++i) {
      const Rational x0 = samplePointInside(strip, i);
      if (lead(x0) == 0) continue;
      // Odd degree in y with nonzero leading coefficient: a real root exists.
      const auto box = fibreWitness(c.dF.atX(x0), x0);
      c.nonSingularity = Singular{*box, "d_F has odd y-degree " + std::to_string(ydeg) +
                                            "; the fibre x = " + toString(x0) + " has a real zero"};
      return c;
    }
  }

  for (int i = 0; i < kFibreSamples; ++i) {
    const Rational x0 = samplePointInside(strip, i);
    if (auto box = fibreWitness(c.dF.atX(x0), x0)) {
      c.nonSingularity =
          Singular{*box, "the sampled fibre x = " + toString(x0) + " of d_F has a real zero"};
      return c;
    }
  }
  c.nonSingularity = UnknownSingularity{"d_F depends on y with even y-degree " +
                                        std::to_string(ydeg) + "; no sampled fibre vanishes"};
  return c;
}

LeadingPairData leadingPairData(const PlanarMap& map) {
  const int m = std::max(map.P.yDegree(), map.Q.yDegree());
  if (m < 1) throw Error(ErrorCode::NoLeadingPair, "no leading pair: both components are y-free");
  const UniPoly& p1 = map.P.coeff(1);
  const UniPoly& q1 = map.Q.coeff(1);
  const UniPoly& pm = map.P.coeff(m);
  const UniPoly& qm = map.Q.coeff(m);
  return {m, p1 * qm - q1 * pm, p1.derivative() * qm - q1.derivative() * pm};
}

}  // namespace ytri
