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
#include "ytri/mapalg.hpp"
#include "ytri/parse.hpp"

namespace ytri {
namespace {

using testing::Gen;

TEST(Jacobian, TypeOneOneExample) {
  const PlanarMap f = parseMap("(x^2+1)*y + 2*x ; (x^2+1)*y + x");
  EXPECT_EQ(jacobianDet(f), BiPoly(UniPoly{1, 0, 1}));
}

TEST(Jacobian, TypeTwoTwoExample) {
  const PlanarMap f = parseMap("x^3*y^2 + x ; x^3*y^2 + x + y");
  EXPECT_EQ(jacobianDet(f), BiPoly::term(UniPoly{0, 0, 3}, 2) + BiPoly::constant(1));
}

TEST(Jacobian, FoldExample) {
  EXPECT_EQ(jacobianDet(parseMap("x^2 ; x^2*y")), BiPoly(UniPoly{0, 0, 0, 2}));
}

TEST(Jacobian, ChainRule) {
  // d(F o G) = dF(G) * dG
  Gen g(31);
  for (int i = 0; i < 40; ++i) {
    const PlanarMap f{g.bipoly(2, 2, 5), g.bipoly(2, 2, 5), Interval::real()};
    const PlanarMap h{g.bipoly(2, 2, 5), g.bipoly(2, 2, 5), Interval::real()};
    const PlanarMap fh = compose(f, h);
    EXPECT_EQ(jacobianDet(fh), substitute(jacobianDet(f), h.P, h.Q) * jacobianDet(h));
  }
}

TEST(Compose, Associative) {
  Gen g(32);
  for (int i = 0; i < 30; ++i) {
    const PlanarMap a{g.bipoly(2, 2, 5), g.bipoly(2, 2, 5), Interval::real()};
    const PlanarMap b{g.bipoly(2, 2, 5), g.bipoly(2, 2, 5), Interval::real()};
    const PlanarMap c{g.bipoly(2, 2, 5), g.bipoly(2, 2, 5), Interval::real()};
    EXPECT_EQ(compose(compose(a, b), c), compose(a, compose(b, c)));
  }
}

TEST(Compose, AgreesWithPointwiseEvaluation) {
  Gen g(33);
  for (int i = 0; i < 30; ++i) {
    const PlanarMap a{g.bipoly(2, 2, 5), g.bipoly(2, 2, 5), Interval::real()};
    const PlanarMap b{g.bipoly(2, 2, 5), g.bipoly(2, 2, 5), Interval::real()};
    const Point p{g.rational(5), g.rational(5)};
    EXPECT_EQ(evalMap(compose(a, b), p), evalMap(a, evalMap(b, p)));
  }
}

TEST(MapType, ReportsYDegrees) {
  EXPECT_EQ(mapType(parseMap("x^3*y^2 + x ; y")), (MapType{2, 1}));
  EXPECT_EQ(mapType(parseMap("x ; 0")), (MapType{0, 0}));
}

TEST(EvalMap, RejectsPointsOutsideStrip) {
  const PlanarMap f = parseMap("x^2 ; x^2*y on (0, inf)");
  EXPECT_EQ(evalMap(f, Point{2, 3}), (Point{4, 12}));
  try {
    (void)evalMap(f, Point{0, 1});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::OutsideStrip);
  }
}

TEST(Classify, DeltaMapNonSingularOnHalfLine) {
  const Classification c = classify(parseMap("x^2 ; x^2*y on (0, inf)"));
  EXPECT_TRUE(c.isDeltaMap);
  EXPECT_FALSE(c.isJacobianMap);
  ASSERT_TRUE(c.delta.has_value());
  EXPECT_EQ(*c.delta, (UniPoly{0, 0, 0, 2}));
  EXPECT_TRUE(c.nonSingularCertified());
}

TEST(Classify, DeltaMapSingularOnLineWithWitness) {
  const Classification c = classify(parseMap("x^2 ; x^2*y"));
  ASSERT_TRUE(c.singular());
  const auto& s = std::get<Singular>(c.nonSingularity);
  EXPECT_LE(s.witness.xLower, 0);
  EXPECT_GE(s.witness.xUpper, 0);
}

TEST(Classify, JacobianMap) {
  const Classification c = classify(parseMap("x + y^3 ; y"));
  EXPECT_TRUE(c.isJacobianMap);
  EXPECT_TRUE(c.nonSingularCertified());
}

TEST(Classify, OddDegreeDeterminantIsSingular) {
  // d_F = 2 y
  const Classification c = classify(parseMap("x ; y^2"));
  ASSERT_TRUE(c.singular());
  const auto& w = std::get<Singular>(c.nonSingularity).witness;
  EXPECT_LE(w.yLower, 0);
  EXPECT_GE(w.yUpper, 0);
}

TEST(Classify, PositiveEvenDeterminantIsUnknown) {
  const Classification c = classify(parseMap("x^3*y^2 + x ; x^3*y^2 + x + y"));
  EXPECT_FALSE(c.isDeltaMap);
  EXPECT_TRUE(std::holds_alternative<UnknownSingularity>(c.nonSingularity));
}

TEST(Classify, EvenDeterminantWithVanishingFibreIsSingular) {
  // d_F = y^2 - 1
  const Classification c = classify(parseMap("x ; 1/3*y^3 - y"));
  EXPECT_TRUE(c.singular());
}

TEST(Classify, SingularWitnessBoxesContainZeros) {
  Gen g(34);
  for (int i = 0; i < 40; ++i) {
    const PlanarMap f{g.bipoly(2, 2, 5), g.bipoly(2, 2, 5), Interval::real()};
    const Classification c = classify(f);
    if (!c.singular()) continue;
    const WitnessBox& w = std::get<Singular>(c.nonSingularity).witness;
    if (w.xLower == w.xUpper) {
      // Exact fibre: d_F(x0, .) has a root in the y-range.
      const UniPoly fibre = c.dF.atX(w.xLower);
      if (w.yLower == w.yUpper) {
        EXPECT_EQ(fibre(w.yLower), 0);
      } else {
        EXPECT_TRUE(fibre.isZero() || countRoots(fibre, Interval{w.yLower, w.yUpper}) > 0 ||
                    fibre(w.yLower) == 0 || fibre(w.yUpper) == 0);
      }
    }
  }
}

TEST(LeadingPair, Determinants) {
  const LeadingPairData lp = leadingPairData(parseMap("x^3*y^2 + x ; x^3*y^2 + x + y"));
  EXPECT_EQ(lp.m, 2);
  EXPECT_EQ(lp.d1m, (UniPoly{0, 0, 0, -1}));
  EXPECT_TRUE(lp.d1mStar.isZero());
  EXPECT_THROW((void)leadingPairData(parseMap("x ; x^2")), Error);
}

}  // namespace
}  // namespace ytri
