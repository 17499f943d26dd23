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

#include <vector>

#include "ytri/poly.hpp"

namespace ytri {

/// Sturm chain p, p', -rem(p, p'), ... up to the last nonzero remainder.
struct SturmSequence {
  std::vector<UniPoly> polynomials;

  /// Sign variations at a point (zeros dropped).
  int variations(const Rational& at) const;
};

/// Throws Error(ZeroPolynomial) for the zero polynomial.
SturmSequence sturmSequence(const UniPoly& p);

/// Cauchy bound 1 + max|c_i| / |lead|: every real root lies strictly inside
/// (-bound, bound).
Rational cauchyBound(const UniPoly& p);

/// p / gcd(p, p'), monic.
UniPoly squarefreePart(const UniPoly& p);

/// Yun decomposition: p = lead * prod_i f_i^(i+1), each f_i monic and
/// squarefree, pairwise coprime. Trailing unit factors are dropped.
std::vector<UniPoly> squarefreeFactors(const UniPoly& p);

/// Number of distinct real roots in the open interval.
int countRoots(const UniPoly& p, const Interval& interval);

/// True iff p is not the zero polynomial and has no real root in the interval.
bool isNonVanishing(const UniPoly& p, const Interval& interval);

/// Open rational interval holding exactly one distinct root; endpoints are
/// never roots.
struct IsolatingInterval {
  Rational lower;
  Rational upper;
  int multiplicity = 1;

  Rational width() const { return upper - lower; }
};

/// Isolating intervals in increasing order, one per distinct root in the
/// open interval, each carrying the root multiplicity.
std::vector<IsolatingInterval> isolateRoots(const UniPoly& p, const Interval& interval);

/// Shrinks an interval produced by isolateRoots(p, ...) until its width is at
/// most maxWidth. The root stays strictly inside.
IsolatingInterval refine(const UniPoly& p, IsolatingInterval root, const Rational& maxWidth);

/// True iff some root of p in the interval has multiplicity exactly one.
bool hasSimpleZero(const UniPoly& p, const Interval& interval);

/// Rational roots of p in the open interval, increasing.
std::vector<Rational> rationalRoots(const UniPoly& p, const Interval& interval);

enum class RootSign { Negative, Zero, Positive };

struct RootSignVerdict {
  IsolatingInterval root;
  RootSign sign;
};

/// Sign of target at each root of rootsOf in the interval. Zero is decided by
/// a gcd certificate; other signs by refining until target has no root in the
/// isolating interval. Throws Error(RefinementExhausted) after 64 rounds.
std::vector<RootSignVerdict> signAtRoots(const UniPoly& target, const UniPoly& rootsOf,
                                         const Interval& interval);

/// Whether p <= 0 everywhere on the interval.
bool isNonPositiveOn(const UniPoly& p, const Interval& interval);

/// A deterministic rational strictly inside the interval (0 when possible).
Rational pointInside(const Interval& interval);

/// Deterministic sequence of rationals strictly inside the interval; index 0
/// is pointInside, later indices spread over the whole interval.
Rational samplePointInside(const Interval& interval, int index);

}  // namespace ytri
