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
#include "ytri/chain.hpp"

#include "ytri/error.hpp"
#include "ytri/overloaded.hpp"

namespace ytri {
namespace {

/// Strict monotonicity of alpha and absence of zeros of w on the strip.
std::optional<std::string> quasiCertificate(const UniPoly& alpha, const UniPoly& w, const Interval& strip) {
  const UniPoly slope = alpha.derivative();
  if (!isNonVanishing(slope, strip) || !isNonVanishing(w, strip)) return std::nullopt;
  return "alpha' = " + toString(slope) + " and w = " + toString(w) + " have no real root on " +
         toString(strip);
}

BiPoly polyInY(const UniPoly& p) {
  std::vector<UniPoly> coeffs;
  coeffs.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) coeffs.push_back(UniPoly::constant(c));
  return BiPoly(std::move(coeffs));
}

}  // namespace

std::string kindName(const AtomicMap& factor) {
  return std::visit(Overloaded{
                        [](const TriangularX&) { return std::string("TriangularX"); },
                        [](const TriangularY&) { return std::string("TriangularY"); },
                        [](const ShearX&) { return std::string("ShearX"); },
                        [](const QuasiTriangularX&) { return std::string("QuasiTriangularX"); },
                        [](const ScaledQuasiTriangularX&) { return std::string("ScaledQuasiTriangularX"); },
                        [](const SwappedQuasiTriangular&) { return std::string("SwappedQuasiTriangular"); },
                    },
                    factor.kind);
}

bool isTriangular(const AtomicMap& factor) {
  return std::holds_alternative<TriangularX>(factor.kind) ||
         std::holds_alternative<TriangularY>(factor.kind) || std::holds_alternative<ShearX>(factor.kind);
}

AtomicMap makeTriangularX(const Rational& a, const Rational& b, UniPoly beta) {
  if (a == 0 || b == 0) throw Error(ErrorCode::InvalidCertificate, "triangular factor needs nonzero a, b");
  return {TriangularX{a, b, std::move(beta)}, Interval::real(), "a, b nonzero"};
}

AtomicMap makeTriangularY(const Rational& a, const Rational& b, UniPoly alpha) {
  if (a == 0 || b == 0) throw Error(ErrorCode::InvalidCertificate, "triangular factor needs nonzero a, b");
  return {TriangularY{a, b, std::move(alpha)}, Interval::real(), "a, b nonzero"};
}

AtomicMap makeShearX(const Rational& c, int power) {
  if (c == 0 || power < 1) throw Error(ErrorCode::InvalidCertificate, "shear needs c != 0 and power >= 1");
  return {ShearX{c, power}, Interval::real(), "shear, determinant 1"};
}

AtomicMap makeQuasiTriangular(UniPoly alpha, UniPoly w, UniPoly beta, const Interval& strip) {
  auto cert = quasiCertificate(alpha, w, strip);
  if (!cert) {
    throw Error(ErrorCode::InvalidCertificate, "(" + toString(alpha) + ", (" + toString(w) + ")*y + " +
                                                   toString(beta) + ") is not injective-certified on " +
                                                   toString(strip));
  }
  if (w.degree() == 0) {
    if (alpha.degree() == 1 && alpha[0] == 0) return makeTriangularX(alpha[1], w[0], std::move(beta));
    return {QuasiTriangularX{std::move(alpha), w[0], std::move(beta)}, strip, *cert};
  }
  return {ScaledQuasiTriangularX{std::move(alpha), std::move(w), std::move(beta)}, strip, *cert};
}

AtomicMap makeSwappedQuasiTriangular(UniPoly alpha, UniPoly w, UniPoly beta, const Interval& strip) {
  auto cert = quasiCertificate(alpha, w, strip);
  if (!cert) {
    throw Error(ErrorCode::InvalidCertificate, "((" + toString(w) + ")*y + " + toString(beta) + ", " +
                                                   toString(alpha) + ") is not injective-certified on " +
                                                   toString(strip));
  }
  return {SwappedQuasiTriangular{std::move(alpha), std::move(w), std::move(beta)}, strip, *cert};
}

bool certificateHolds(const AtomicMap& factor) {
  return std::visit(
      Overloaded{
          [](const TriangularX& t) { return t.a != 0 && t.b != 0; },
          [](const TriangularY& t) { return t.a != 0 && t.b != 0; },
          [](const ShearX& s) { return s.c != 0 && s.power >= 1; },
          [&](const QuasiTriangularX& q) {
            return q.b != 0 && isNonVanishing(q.alpha.derivative(), factor.domain);
          },
          [&](const ScaledQuasiTriangularX& q) {
            return quasiCertificate(q.alpha, q.w, factor.domain).has_value();
          },
          [&](const SwappedQuasiTriangular& q) {
            return quasiCertificate(q.alpha, q.w, factor.domain).has_value();
          },
      },
      factor.kind);
}

PlanarMap toPlanarMap(const AtomicMap& factor) {
  const BiPoly x = BiPoly::x();
  const BiPoly y = BiPoly::y();
  return std::visit(
      Overloaded{
          [&](const TriangularX& t) {
            return PlanarMap{x * UniPoly::constant(t.a), y * UniPoly::constant(t.b) + BiPoly(t.beta),
                             factor.domain};
          },
          [&](const TriangularY& t) {
            return PlanarMap{x * UniPoly::constant(t.a) + polyInY(t.alpha), y * UniPoly::constant(t.b),
                             factor.domain};
          },
          [&](const ShearX& s) {
            return PlanarMap{x - BiPoly::term(UniPoly::constant(s.c), s.power), y, factor.domain};
          },
          [&](const QuasiTriangularX& q) {
            return PlanarMap{BiPoly(q.alpha), y * UniPoly::constant(q.b) + BiPoly(q.beta), factor.domain};
          },
          [&](const ScaledQuasiTriangularX& q) {
            return PlanarMap{BiPoly(q.alpha), y * q.w + BiPoly(q.beta), factor.domain};
          },
          [&](const SwappedQuasiTriangular& q) {
            return PlanarMap{y * q.w + BiPoly(q.beta), BiPoly(q.alpha), factor.domain};
          },
      },
      factor.kind);
}

PlanarMap composeChain(const Chain& chain) {
  if (chain.factors.empty()) throw Error(ErrorCode::InvalidArgument, "composeChain: empty chain");
  PlanarMap acc = toPlanarMap(chain.factors.back());
  acc.strip = chain.strip;
  for (auto it = chain.factors.rbegin() + 1; it != chain.factors.rend(); ++it) {
    acc = compose(toPlanarMap(*it), acc);
  }
  return acc;
}

}  // namespace ytri
