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
#include "ytri/inverse.hpp"

#include <algorithm>

#include "ytri/error.hpp"
#include "ytri/overloaded.hpp"

namespace ytri {
namespace {

BiPoly inY(const UniPoly& p) {
  std::vector<UniPoly> coeffs;
  for (const auto& c : p.coeffs()) coeffs.push_back(UniPoly::constant(c));
  return BiPoly(std::move(coeffs));
}

/// (x - a0) / a1 for alpha = a1 x + a0.
UniPoly affineInverse(const UniPoly& alpha) { return UniPoly{-alpha[0] / alpha[1], 1 / alpha[1]}; }

bool increasingOn(const UniPoly& alpha, const Interval& domain) {
  return sign(alpha.derivative()(pointInside(domain))) > 0;
}

PlanarMap planar(const FactorInverse& inverse) {
  return std::visit(Overloaded{
                        [](const AtomicMap& a) { return toPlanarMap(a); },
                        [](const PlanarMap& m) { return m; },
                        [](const MonotoneInverse&) -> PlanarMap {
                          throw Error(ErrorCode::InvalidArgument, "monotone inverse has no polynomial form");
                        },
                    },
                    inverse);
}

Rational relativeError(const Rational& got, const Rational& want) {
  const Rational scale = std::max(Rational(1), Rational(abs(want)));
  return Rational(abs(got - want)) / scale;
}

struct Search {
  Rational lo;
  Rational hi;
  int loSign;
};

/// Initial bracket with a sign change of alpha - target, or the exact root.
std::variant<Search, Rational> initialBracket(const UniPoly& alpha, const Interval& domain, const Rational& target) {
  const Interval image = imageInterval(alpha, domain);
  if (!image.contains(target)) {
    throw Error(ErrorCode::OutsideImage, toString(target) + " is outside the image " + toString(image));
  }
  const int inc = increasingOn(alpha, domain) ? 1 : -1;
  const Rational c = pointInside(domain);
  struct End {
    Rational value;
    bool exact;
  };
  // direction -1 looks left, +1 right; the wanted sign of alpha - target is
  // direction * inc.
  const auto endpoint = [&](const std::optional<Rational>& bound, int direction) -> End {
    if (bound) return {*bound, false};
    Rational step = 1;
    for (;;) {
      Rational at = c + step * direction;
      const int s = sign(alpha(at) - target);
      if (s == 0 || s == direction * inc) return {at, s == 0};
      step *= 2;
    }
  };
  const End lo = endpoint(domain.lower, -1);
  if (lo.exact) return lo.value;
  const End hi = endpoint(domain.upper, 1);
  if (hi.exact) return hi.value;
  return Search{lo.value, hi.value, -inc};
}

bool bisectStep(const UniPoly& alpha, const Rational& target, Search& s, std::optional<Rational>& exact) {
  Rational mid = (s.lo + s.hi) / 2;
  const int v = sign(alpha(mid) - target);
  if (v == 0) {
    exact = mid;
    return false;
  }
  (v == s.loSign ? s.lo : s.hi) = mid;
  return true;
}

}  // namespace

bool isExplicit(const FactorInverse& inverse) { return !std::holds_alternative<MonotoneInverse>(inverse); }

Interval imageInterval(const UniPoly& alpha, const Interval& domain) {
  if (alpha.degree() < 1) throw Error(ErrorCode::InvalidArgument, "imageInterval: alpha is constant");
  const auto at = [&](const std::optional<Rational>& e) -> std::optional<Rational> {
    if (e) return alpha(*e);
    return std::nullopt;
  };
  if (increasingOn(alpha, domain)) return Interval{at(domain.lower), at(domain.upper)};
  return Interval{at(domain.upper), at(domain.lower)};
}

Bracket monotonePreimage(const UniPoly& alpha, const Interval& domain, const Rational& target, int iterations) {
  auto start = initialBracket(alpha, domain, target);
  if (auto* r = std::get_if<Rational>(&start)) return Bracket{*r, *r, *r};
  Search s = std::get<Search>(start);
  std::optional<Rational> exact;
  for (int i = 0; i < iterations; ++i) {
    if (!bisectStep(alpha, target, s, exact)) return Bracket{*exact, *exact, exact};
  }
  return Bracket{s.lo, s.hi, std::nullopt};
}

Rational solveMonotone(const UniPoly& alpha, const Interval& domain, const Rational& target, int bits) {
  if (alpha.degree() == 1) {
    const Rational x = affineInverse(alpha)(target);
    if (!domain.contains(x)) throw Error(ErrorCode::OutsideImage, toString(target) + " is outside the image");
    return x;
  }
  auto start = initialBracket(alpha, domain, target);
  if (auto* r = std::get_if<Rational>(&start)) return *r;
  Search s = std::get<Search>(start);
  const Rational tolerance = powerOfTwoInverse(bits);
  std::optional<Rational> exact;
  while (s.hi - s.lo > tolerance) {
    if (!bisectStep(alpha, target, s, exact)) return *exact;
  }
  return (s.lo + s.hi) / 2;
}

FactorInverse invertAtomic(const AtomicMap& factor) {
  if (!certificateHolds(factor)) {
    throw Error(ErrorCode::InvalidCertificate, kindName(factor) + " factor has no valid certificate");
  }
  return std::visit(
      Overloaded{
          [](const TriangularX& t) -> FactorInverse {
            return makeTriangularX(1 / t.a, 1 / t.b, t.beta.compose(UniPoly::monomial(1 / t.a, 1)) * (-1 / t.b));
          },
          [](const TriangularY& t) -> FactorInverse {
            return makeTriangularY(1 / t.a, 1 / t.b,
                                   t.alpha.compose(UniPoly::monomial(1 / t.b, 1)) * (-1 / t.a));
          },
          [](const ShearX& s) -> FactorInverse { return makeShearX(-s.c, s.power); },
          [&](const QuasiTriangularX& q) -> FactorInverse {
            if (q.alpha.degree() == 1) {
              const UniPoly a = affineInverse(q.alpha);
              return makeQuasiTriangular(a, UniPoly::constant(1 / q.b), q.beta.compose(a) * (-1 / q.b),
                                         imageInterval(q.alpha, factor.domain));
            }
            return MonotoneInverse{q.alpha, UniPoly::constant(q.b), q.beta, false, factor.domain};
          },
          [&](const ScaledQuasiTriangularX& q) -> FactorInverse {
            return MonotoneInverse{q.alpha, q.w, q.beta, false, factor.domain};
          },
          [&](const SwappedQuasiTriangular& q) -> FactorInverse {
            if (q.alpha.degree() == 1 && q.w.degree() == 0) {
              // (u, v) -> (a(v), (u - beta(a(v))) / w)
              const UniPoly a = affineInverse(q.alpha);
              const Rational invW = 1 / q.w[0];
              return PlanarMap{inY(a), BiPoly::x() * UniPoly::constant(invW) - inY(q.beta.compose(a) * invW),
                               Interval::real()};
            }
            return MonotoneInverse{q.alpha, q.w, q.beta, true, factor.domain};
          },
      },
      factor.kind);
}

InverseObject invertChain(const Chain& chain) {
  if (chain.factors.empty()) throw Error(ErrorCode::InvalidArgument, "invertChain: empty chain");
  EvaluableInverse inverses;
  for (auto it = chain.factors.rbegin(); it != chain.factors.rend(); ++it) {
    inverses.factors.push_back(invertAtomic(*it));
  }
  const AtomicMap& first = chain.factors.back();
  const Interval innerImage = std::visit(
      Overloaded{
          [&](const TriangularX& t) { return imageInterval(UniPoly::monomial(t.a, 1), chain.strip); },
          [&](const QuasiTriangularX& q) { return imageInterval(q.alpha, chain.strip); },
          [&](const ScaledQuasiTriangularX& q) { return imageInterval(q.alpha, chain.strip); },
          [&](const SwappedQuasiTriangular& q) { return imageInterval(q.alpha, chain.strip); },
          [](const auto&) { return Interval::real(); },
      },
      first.kind);

  if (!std::all_of(inverses.factors.begin(), inverses.factors.end(),
                   [](const FactorInverse& f) { return isExplicit(f); })) {
    return InverseObject{std::move(inverses), innerImage};
  }
  PlanarMap acc = planar(inverses.factors.back());
  acc.strip = Interval::real();
  for (auto it = inverses.factors.rbegin() + 1; it != inverses.factors.rend(); ++it) {
    acc = compose(planar(*it), acc);
  }
  return InverseObject{ExplicitInverse{std::move(acc)}, innerImage};
}

Point evalFactorInverse(const FactorInverse& inverse, const Point& at, int toleranceBits) {
  return std::visit(Overloaded{
                        [&](const AtomicMap& a) { return evalMap(toPlanarMap(a), at); },
                        [&](const PlanarMap& m) { return evalMap(m, at); },
                        [&](const MonotoneInverse& m) {
                          const Rational& s = m.swapped ? at.y : at.x;
                          const Rational& other = m.swapped ? at.x : at.y;
                          const Rational x = solveMonotone(m.alpha, m.domain, s, toleranceBits + 64);
                          return Point{x, (other - m.beta(x)) / m.w(x)};
                        },
                    },
                    inverse);
}

Point evalInverse(const InverseObject& inverse, const Point& at, int toleranceBits) {
  if (const auto* e = std::get_if<ExplicitInverse>(&inverse.form)) return evalMap(e->map, at);
  Point p = at;
  const auto& factors = std::get<EvaluableInverse>(inverse.form).factors;
  for (auto it = factors.rbegin(); it != factors.rend(); ++it) p = evalFactorInverse(*it, p, toleranceBits);
  return p;
}

InverseCheck verifyInverse(const PlanarMap& map, const InverseObject& inverse, int toleranceBits) {
  InverseCheck check;
  constexpr int kSamples = 100;
  const auto domainPoint = [&](int i) {
    return Point{samplePointInside(map.strip, i), samplePointInside(Interval::real(), (i * 7 + 3) % 97)};
  };

  if (const auto* e = std::get_if<ExplicitInverse>(&inverse.form)) {
    const PlanarMap& g = e->map;
    const BiPoly x = BiPoly::x();
    const BiPoly y = BiPoly::y();
    check.exact = true;
    check.ok = substitute(g.P, map.P, map.Q) == x && substitute(g.Q, map.P, map.Q) == y &&
               substitute(map.P, g.P, g.Q) == x && substitute(map.Q, g.P, g.Q) == y;
    if (!check.ok) {
      for (int i = 0; i < kSamples && !check.counterexample; ++i) {
        const Point p = domainPoint(i);
        if (evalMap(g, evalMap(map, p)) != p) check.counterexample = p;
        const Point u{p.x, p.y};
        if (!check.counterexample && map.strip.contains(evalMap(g, u).x) && evalMap(map, evalMap(g, u)) != u) {
          check.counterexample = u;
        }
      }
    }
    return check;
  }

  const Rational tolerance = powerOfTwoInverse(toleranceBits);
  check.ok = true;
  for (int i = 0; i < kSamples; ++i) {
    const Point image = evalMap(map, domainPoint(i));
    try {
      const Point back = evalMap(map, evalInverse(inverse, image, toleranceBits));
      const Rational err = std::max(relativeError(back.x, image.x), relativeError(back.y, image.y));
      check.maxError = std::max(check.maxError, err);
      if (err > tolerance && !check.counterexample) {
        check.ok = false;
        check.counterexample = image;
      }
    } catch (const Error&) {
      check.ok = false;
      if (!check.counterexample) check.counterexample = image;
    }
  }
  return check;
}

}  // namespace ytri
