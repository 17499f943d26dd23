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

#include <string>
#include <variant>
#include <vector>

#include "ytri/mapalg.hpp"

namespace ytri {

/// (a x, b y + beta(x)).
struct TriangularX {
  Rational a;
  Rational b;
  UniPoly beta;
};

/// (a x + alpha(y), b y); alpha is stored as a polynomial in its argument.
struct TriangularY {
  Rational a;
  Rational b;
  UniPoly alpha;
};

/// (x - c y^power, y).
struct ShearX {
  Rational c;
  int power = 1;
};

/// (alpha(x), b y + beta(x)) with alpha strictly monotone on the strip.
struct QuasiTriangularX {
  UniPoly alpha;
  Rational b;
  UniPoly beta;
};

/// (alpha(x), w(x) y + beta(x)), alpha strictly monotone and w free of zeros
/// on the strip.
struct ScaledQuasiTriangularX {
  UniPoly alpha;
  UniPoly w;
  UniPoly beta;
};

/// (w(x) y + beta(x), alpha(x)): the component-swapped terminal factor left
/// when a degree-one first component is used to eliminate the second.
struct SwappedQuasiTriangular {
  UniPoly alpha;
  UniPoly w;
  UniPoly beta;
};

using AtomicKind = std::variant<TriangularX, TriangularY, ShearX, QuasiTriangularX,
                                ScaledQuasiTriangularX, SwappedQuasiTriangular>;

/// One injective factor of a chain, together with the strip on which its
/// injectivity certificate was established.
struct AtomicMap {
  AtomicKind kind;
  Interval domain;
  std::string certificate;
};

std::string kindName(const AtomicMap& factor);
bool isTriangular(const AtomicMap& factor);

AtomicMap makeTriangularX(const Rational& a, const Rational& b, UniPoly beta);
AtomicMap makeTriangularY(const Rational& a, const Rational& b, UniPoly alpha);
AtomicMap makeShearX(const Rational& c, int power);
/// Builds the most specific factor for (alpha(x), w(x) y + beta(x)) on the
/// strip: TriangularX, QuasiTriangularX or ScaledQuasiTriangularX. Throws
/// Error(InvalidCertificate) if alpha is not strictly monotone or w vanishes.
AtomicMap makeQuasiTriangular(UniPoly alpha, UniPoly w, UniPoly beta, const Interval& strip);
/// (w(x) y + beta(x), alpha(x)) with the same certificate requirements.
AtomicMap makeSwappedQuasiTriangular(UniPoly alpha, UniPoly w, UniPoly beta, const Interval& strip);

/// Re-derives the injectivity certificate with realroots.
bool certificateHolds(const AtomicMap& factor);

PlanarMap toPlanarMap(const AtomicMap& factor);

/// F = factors[0] o factors[1] o ... o factors.back(); the last factor acts
/// first, on the chain strip.
struct Chain {
  std::vector<AtomicMap> factors;
  Interval strip;
};

/// Explicit map of the composition. Throws Error(InvalidArgument) on an
/// empty chain.
PlanarMap composeChain(const Chain& chain);

}  // namespace ytri
