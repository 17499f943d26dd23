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
#include "ytri/chain.hpp"
#include "ytri/error.hpp"
#include "ytri/parse.hpp"

namespace ytri {
namespace {

using testing::Gen;

TEST(Factories, RejectDegenerateTriangularFactors) {
  EXPECT_THROW((void)makeTriangularX(0, 1, UniPoly()), Error);
  EXPECT_THROW((void)makeTriangularY(1, 0, UniPoly()), Error);
  EXPECT_THROW((void)makeShearX(0, 2), Error);
  EXPECT_THROW((void)makeShearX(1, 0), Error);
}

TEST(Factories, QuasiTriangularPicksMostSpecificKind) {
  const Interval r = Interval::real();
  EXPECT_EQ(kindName(makeQuasiTriangular(UniPoly{0, 2}, UniPoly{3}, UniPoly{0, 0, 1}, r)), "TriangularX");
  EXPECT_EQ(kindName(makeQuasiTriangular(UniPoly{1, 1, 0, 1}, UniPoly{3}, UniPoly(), r)), "QuasiTriangularX");
  EXPECT_EQ(kindName(makeQuasiTriangular(UniPoly{0, 1}, UniPoly{1, 0, 1}, UniPoly(), r)), "ScaledQuasiTriangularX");
}

TEST(Factories, QuasiTriangularNeedsCertificate) {
  try {
    (void)makeQuasiTriangular(UniPoly{0, 0, 1}, UniPoly{1}, UniPoly(), Interval::real());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InvalidCertificate);
  }
  // x^2 is monotone on (0, inf) and w = x has no zero there.
  const AtomicMap f = makeQuasiTriangular(UniPoly{0, 0, 1}, UniPoly{0, 1}, UniPoly(), Interval{Rational(0), std::nullopt});
  EXPECT_TRUE(certificateHolds(f));
  EXPECT_THROW((void)makeSwappedQuasiTriangular(UniPoly{0, 1}, UniPoly{0, 1}, UniPoly(), Interval::real()), Error);
}

TEST(Factories, PlanarForms) {
  EXPECT_EQ(toPlanarMap(makeShearX(2, 3)), parseMap("x - 2*y^3 ; y"));
  EXPECT_EQ(toPlanarMap(makeTriangularX(2, 3, UniPoly{0, 0, 1})), parseMap("2*x ; 3*y + x^2"));
  EXPECT_EQ(toPlanarMap(makeTriangularY(2, 3, UniPoly{0, 0, 1})), parseMap("2*x + y^2 ; 3*y"));
  EXPECT_EQ(toPlanarMap(makeSwappedQuasiTriangular(UniPoly{0, 1}, UniPoly{2}, UniPoly{1}, Interval::real())),
            parseMap("2*y + 1 ; x"));
}

TEST(ComposeChain, LastFactorActsFirst) {
  // (x + y, y) o (x, 2y): (x + 2y, 2y)
  const Chain c{{makeShearX(-1, 1), makeTriangularX(1, 2, UniPoly())}, Interval::real()};
  EXPECT_EQ(composeChain(c), parseMap("x + 2*y ; 2*y"));
  EXPECT_THROW((void)composeChain(Chain{{}, Interval::real()}), Error);
}

TEST(ComposeChain, KeepsChainStrip) {
  const Interval half{Rational(0), std::nullopt};
  const Chain c{{makeQuasiTriangular(UniPoly{0, 0, 1}, UniPoly{0, 0, 1}, UniPoly(), half)}, half};
  EXPECT_EQ(composeChain(c), parseMap("x^2 ; x^2*y on (0, inf)"));
}

TEST(ComposeChain, DeterminantIsProductOfFactorDeterminants) {
  Gen g(41);
  for (int i = 0; i < 40; ++i) {
    const Chain c = testing::shearChain(g, 5);
    const PlanarMap f = composeChain(c);
    const PlanarMap terminal = toPlanarMap(c.factors.back());
    // Shears have determinant 1, so d_F is the terminal determinant.
    EXPECT_EQ(jacobianDet(f), jacobianDet(terminal));
  }
}

TEST(Certificates, GeneratedTerminalsHold) {
  Gen g(42);
  for (int i = 0; i < 60; ++i) {
    const Chain c = testing::shearChain(g, 6);
    for (const auto& f : c.factors) EXPECT_TRUE(certificateHolds(f)) << kindName(f);
  }
}

}  // namespace
}  // namespace ytri
