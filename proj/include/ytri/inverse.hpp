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
#include <variant>
#include <vector>

#include "ytri/chain.hpp"

namespace ytri {

/// Inverse of (alpha(x), w(x) y + beta(x)), or of the swapped form
/// (w(x) y + beta(x), alpha(x)) when swapped is set. alpha^-1 is evaluated by
/// exact rational bisection on the domain strip.
struct MonotoneInverse {
  UniPoly alpha;
  UniPoly w;
  UniPoly beta;
  bool swapped = false;
  Interval domain;
};

/// Explicit atomic inverse, explicit polynomial map, or evaluator.
using FactorInverse = std::variant<AtomicMap, PlanarMap, MonotoneInverse>;

bool isExplicit(const FactorInverse& inverse);

struct ExplicitInverse {
  PlanarMap map;
};

/// Factor inverses, outermost first like Chain: the last one acts first.
struct EvaluableInverse {
  std::vector<FactorInverse> factors;
};

struct InverseObject {
  std::variant<ExplicitInverse, EvaluableInverse> form;
  /// alpha(I) for the factor acting first in the forward chain, where the
  /// last inverse factor is defined.
  Interval innerImage;

  bool isExplicit() const { return std::holds_alternative<ExplicitInverse>(form); }
};

/// Default precision of monotone inversion, in bits.
inline constexpr int kDefaultToleranceBits = 40;

/// alpha(I) for alpha strictly monotone on I.
Interval imageInterval(const UniPoly& alpha, const Interval& domain);

/// Rational bracket [lower, upper] around the preimage; exact when hit.
struct Bracket {
  Rational lower;
  Rational upper;
  std::optional<Rational> exact;
  Rational width() const { return exact ? Rational(0) : Rational(upper - lower); }
};

/// x in the domain with alpha(x) = target, after the given number of
/// bisection steps from the initial bracket. Throws Error(OutsideImage) when
/// target is not in alpha(domain).
Bracket monotonePreimage(const UniPoly& alpha, const Interval& domain, const Rational& target, int iterations);

/// Same, iterating until the bracket is at most 2^-bits wide; returns its
/// midpoint (or the exact preimage).
Rational solveMonotone(const UniPoly& alpha, const Interval& domain, const Rational& target, int bits);

/// Throws Error(InvalidCertificate) if the factor's certificate fails.
FactorInverse invertAtomic(const AtomicMap& factor);

InverseObject invertChain(const Chain& chain);

Point evalFactorInverse(const FactorInverse& inverse, const Point& at, int toleranceBits = kDefaultToleranceBits);
Point evalInverse(const InverseObject& inverse, const Point& at, int toleranceBits = kDefaultToleranceBits);

struct InverseCheck {
  bool ok = false;
  /// Exact identity check (explicit case) rather than sampling.
  bool exact = false;
  std::optional<Point> counterexample;
  /// Largest relative image-side error seen (sampled case).
  Rational maxError;
};

/// Explicit: inv o F = id and F o inv = id as polynomial identities.
/// Evaluable: |F(inv(p)) - p| <= 2^-bits max(1, |p|) componentwise at 100
/// deterministic image points.
InverseCheck verifyInverse(const PlanarMap& map, const InverseObject& inverse,
                           int toleranceBits = kDefaultToleranceBits);

}  // namespace ytri
