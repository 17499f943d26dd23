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
#include <gtest/gtest.h>

#include "support/generators.hpp"
#include "ytri/error.hpp"
#include "ytri/poly.hpp"

namespace ytri {
namespace {

using testing::Gen;

TEST(UniPoly, CanonicalFormStripsTrailingZeros) {
  const UniPoly p{1, 2, 0, 0};
  EXPECT_EQ(p.degree(), 1);
  EXPECT_EQ(p, (UniPoly{1, 2}));
  EXPECT_TRUE(UniPoly{0}.isZero());
  EXPECT_EQ(UniPoly().degree(), kZeroDegree);
}

TEST(UniPoly, HornerEvaluation) {
  const UniPoly p{Rational(1, 2), -3, 0, 2};  // 2x^3 - 3x + 1/2
  EXPECT_EQ(p(Rational(3)), Rational(91, 2));
  EXPECT_EQ(p(Rational(-1, 2)), Rational(7, 4));
}

TEST(UniPoly, DivModReconstructs) {
  Gen g(11);
  for (int i = 0; i < 200; ++i) {
    const UniPoly a = g.poly(6, 10);
    const UniPoly b = g.polyExact(static_cast<int>(g.between(0, 4)), 10);
    const DivMod qr = divmod(a, b);
    EXPECT_EQ(qr.quotient * b + qr.remainder, a);
    EXPECT_LT(qr.remainder.degree(), b.degree());
  }
}

TEST(UniPoly, DivisionByZeroThrows) {
  try {
    (void)divmod(UniPoly{1, 1}, UniPoly());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ZeroPolynomial);
  }
}

TEST(UniPoly, GcdOfProducts) {
  // (x - 1)(x + 2) and (x - 1)(x - 3): gcd x - 1.
  const UniPoly a = UniPoly{-1, 1} * UniPoly{2, 1};
  const UniPoly b = UniPoly{-1, 1} * UniPoly{-3, 1} * Rational(5);
  EXPECT_EQ(gcd(a, b), (UniPoly{-1, 1}));
  EXPECT_EQ(gcd(UniPoly(), b), b.monic());
}

TEST(UniPoly, GcdOfZerosIsUndefined) {
  try {
    (void)gcd(UniPoly(), UniPoly());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::UndefinedGcd);
  }
}

TEST(UniPoly, GcdDividesBoth) {
  Gen g(12);
  for (int i = 0; i < 100; ++i) {
    const UniPoly common = g.polyExact(static_cast<int>(g.between(1, 3)), 5);
    const UniPoly a = common * g.polyExact(2, 5);
    const UniPoly b = common * g.polyExact(3, 5);
    const UniPoly d = gcd(a, b);
    EXPECT_TRUE(divmod(a, d).remainder.isZero());
    EXPECT_TRUE(divmod(b, d).remainder.isZero());
    EXPECT_TRUE(divmod(d, common.monic()).remainder.isZero());
    EXPECT_EQ(d.lead(), 1);
  }
}

TEST(UniPoly, RingAxioms) {
  Gen g(13);
  for (int i = 0; i < 200; ++i) {
    const UniPoly a = g.poly(4, 10);
    const UniPoly b = g.poly(4, 10);
    const UniPoly c = g.poly(4, 10);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a - a, UniPoly());
    EXPECT_EQ(a * UniPoly::constant(1), a);
  }
}

TEST(UniPoly, DerivativeIsLinearAndLeibniz) {
  Gen g(14);
  for (int i = 0; i < 100; ++i) {
    const UniPoly a = g.poly(5, 10);
    const UniPoly b = g.poly(5, 10);
    EXPECT_EQ((a + b).derivative(), a.derivative() + b.derivative());
    EXPECT_EQ((a * b).derivative(), a.derivative() * b + a * b.derivative());
  }
}

TEST(UniPoly, ComposeAgreesWithEvaluation) {
  Gen g(15);
  for (int i = 0; i < 100; ++i) {
    const UniPoly a = g.poly(4, 10);
    const UniPoly b = g.poly(3, 10);
    const Rational t = g.rational(10);
    EXPECT_EQ(a.compose(b)(t), a(b(t)));
  }
}

TEST(UniPoly, PowMatchesRepeatedProduct) {
  const UniPoly p{1, -2, 1};
  EXPECT_EQ(p.pow(3), p * p * p);
  EXPECT_EQ(p.pow(0), UniPoly::constant(1));
}

TEST(UniPoly, PrimitiveIntegerCoefficients) {
  const UniPoly p{Rational(-1, 2), 0, Rational(-3, 4)};
  const std::vector<Integer> expected{2, 0, 3};
  EXPECT_EQ(p.primitiveIntegerCoeffs(), expected);
}

TEST(UniPoly, PrintsCanonically) {
  EXPECT_EQ(toString(UniPoly{Rational(1, 2), -1, 0, 5}), "5*x^3 - x + 1/2");
  EXPECT_EQ(toString(UniPoly()), "0");
  EXPECT_EQ(toString(UniPoly{0, Rational(-5, 2)}), "-5/2*x");
}

TEST(BiPoly, RingAxioms) {
  Gen g(16);
  for (int i = 0; i < 100; ++i) {
    const BiPoly a = g.bipoly(3, 3, 10);
    const BiPoly b = g.bipoly(3, 3, 10);
    const BiPoly c = g.bipoly(3, 3, 10);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_TRUE((a - a).isZero());
  }
}

TEST(BiPoly, EvaluationIsAHomomorphism) {
  Gen g(17);
  for (int i = 0; i < 100; ++i) {
    const BiPoly a = g.bipoly(3, 3, 10);
    const BiPoly b = g.bipoly(3, 3, 10);
    const Rational x = g.rational(10);
    const Rational y = g.rational(10);
    EXPECT_EQ((a * b)(x, y), a(x, y) * b(x, y));
    EXPECT_EQ((a + b)(x, y), a(x, y) + b(x, y));
    EXPECT_EQ(a.atX(x)(y), a(x, y));
  }
}

TEST(BiPoly, PartialDerivatives) {
  // x^2 y^3 + 2 x y
  const BiPoly f = BiPoly::term(UniPoly{0, 0, 1}, 3) + BiPoly::term(UniPoly{0, 2}, 1);
  EXPECT_EQ(f.derivative(Var::X), BiPoly::term(UniPoly{0, 2}, 3) + BiPoly::term(UniPoly{2}, 1));
  EXPECT_EQ(f.derivative(Var::Y), BiPoly::term(UniPoly{0, 0, 3}, 2) + BiPoly(UniPoly{0, 2}));
}

TEST(BiPoly, SubstituteAgreesWithEvaluation) {
  Gen g(18);
  for (int i = 0; i < 60; ++i) {
    const BiPoly f = g.bipoly(3, 2, 5);
    const BiPoly u = g.bipoly(2, 2, 5);
    const BiPoly v = g.bipoly(2, 2, 5);
    const Rational x = g.rational(5);
    const Rational y = g.rational(5);
    EXPECT_EQ(substitute(f, u, v)(x, y), f(u(x, y), v(x, y)));
  }
}

TEST(BiPoly, SubstituteIdentityIsNeutral) {
  Gen g(19);
  for (int i = 0; i < 50; ++i) {
    const BiPoly f = g.bipoly(3, 3, 10);
    EXPECT_EQ(substitute(f, BiPoly::x(), BiPoly::y()), f);
  }
}

TEST(BiPoly, DegreesAndSupport) {
  const BiPoly f = BiPoly::term(UniPoly{0, 0, 1}, 3) + BiPoly(UniPoly{1, 0, 0, 0, 7});
  EXPECT_EQ(f.yDegree(), 3);
  EXPECT_EQ(f.xDegree(), 4);
  EXPECT_EQ(f.ySupport(), (std::vector<int>{0, 3}));
  EXPECT_EQ(BiPoly().yDegree(), kZeroDegree);
}

TEST(BiPoly, PrintsCanonically) {
  const BiPoly f = BiPoly::term(UniPoly{1, 0, 1}, 1) + BiPoly(UniPoly{0, 2});
  EXPECT_EQ(toString(f), "x^2*y + y + 2*x");
}

TEST(Interval, OpenRejectsEmpty) {
  EXPECT_THROW((void)Interval::open(Rational(1), Rational(1)), Error);
  const Interval i = Interval::open(Rational(0), std::nullopt);
  EXPECT_FALSE(i.contains(0));
  EXPECT_TRUE(i.contains(Rational(1, 1000)));
  EXPECT_EQ(toString(i), "(0, inf)");
  EXPECT_EQ(toString(Interval::real()), "(-inf, inf)");
}

}  // namespace
}  // namespace ytri
