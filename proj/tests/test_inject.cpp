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

#include <algorithm>

#include "support/generators.hpp"
#include "ytri/error.hpp"
#include "ytri/inject.hpp"
#include "ytri/parse.hpp"

namespace ytri {
namespace {

using testing::Gen;

const CriterionResult& find(const std::vector<CriterionResult>& results, Criterion tag) {
  const auto it = std::find_if(results.begin(), results.end(), [tag](const CriterionResult& r) { return r.tag == tag; });
  if (it == results.end()) throw std::runtime_error("criterion missing");
  return *it;
}

std::vector<CriterionResult> lemma3(const PlanarMap& f, const CheckOptions& o = {}) {
  return checkLemma3(f, classify(f), o);
}

std::vector<CriterionResult> theorem2(const PlanarMap& f, const CheckOptions& o = {}) {
  return checkTheorem2(f, classify(f), o);
}

Classification unknownClassification(const PlanarMap& f) {
  Classification c = classify(f);
  c.nonSingularity = UnknownSingularity{"fabricated for the test"};
  return c;
}

void expectCollision(const PlanarMap& f, const std::optional<std::pair<Point, Point>>& w) {
  ASSERT_TRUE(w.has_value());
  EXPECT_NE(w->first, w->second);
  EXPECT_EQ(evalMap(f, w->first), evalMap(f, w->second));
}

TEST(Lemma3, TypeZeroOneOnHalfLine) {
  const auto r = lemma3(parseMap("x^2 ; x^2*y on (0, inf)"));
  EXPECT_EQ(find(r, Criterion::L3i).outcome, Outcome::Certified);
}

TEST(Lemma3, NonVanishingLinearCoefficient) {
  const auto r = lemma3(parseMap("(x^2+1)*y + 2*x ; (x^2+1)*y + x"));
  EXPECT_EQ(find(r, Criterion::L3ii).outcome, Outcome::Certified);
  EXPECT_EQ(find(r, Criterion::L3i).outcome, Outcome::Skipped);
}

TEST(Lemma3, SimpleZeroContradictsClaim) {
  const PlanarMap f = parseMap("x*y + x^2 ; y");
  CheckOptions claim;
  claim.assumeNonSingular = true;
  const auto r = checkLemma3(f, unknownClassification(f), claim);
  const auto& iii = find(r, Criterion::L3iii);
  EXPECT_EQ(iii.outcome, Outcome::Contradiction);
  EXPECT_NE(iii.detail.find("input cannot be non-singular"), std::string::npos);
}

TEST(Lemma3, DoubleZeroPassesNecessaryCondition) {
  const PlanarMap f = parseMap("x^2*y + x ; y");
  const auto r = checkLemma3(f, unknownClassification(f), {});
  EXPECT_EQ(find(r, Criterion::L3iii).outcome, Outcome::ConditionHolds);
}

TEST(Theorem2, KnownInconclusiveExample) {
  const auto r = theorem2(parseMap("x^3*y^2 + x ; x^3*y^2 + x + y"));
  EXPECT_EQ(find(r, Criterion::T2i).outcome, Outcome::Failed);
  EXPECT_EQ(find(r, Criterion::T2ii).outcome, Outcome::Failed);
  EXPECT_NE(find(r, Criterion::T2ii).detail.find("d1mStar = 0"), std::string::npos);
  EXPECT_EQ(find(r, Criterion::T2iii).outcome, Outcome::Failed);
  EXPECT_NE(find(r, Criterion::T2iii).detail.find("d1m = -x^3 shares a zero with q_2 = x^3"), std::string::npos);
  EXPECT_EQ(find(r, Criterion::T2iv).outcome, Outcome::Skipped);
}

TEST(Theorem2, ConditionWithoutNonSingularityDoesNotCertify) {
  // d1m = -(x^2 + 1) never vanishes, but d_F = 2xy^2 - 2(x^2+1)y - 1 does,
  // and F(-3, 2) = F(2, -3).
  const PlanarMap f = parseMap("(x^2+1)*y^2 + y ; (x^2+1)*y^2 + 2*y + x");
  const auto r = theorem2(f);
  EXPECT_EQ(find(r, Criterion::T2i).outcome, Outcome::ConditionHolds);
  EXPECT_EQ(evalMap(f, Point{-3, 2}), evalMap(f, Point{2, -3}));
  CheckOptions claim;
  claim.assumeNonSingular = true;
  // A certified singular witness overrides the caller's claim.
  EXPECT_EQ(find(theorem2(f, claim), Criterion::T2i).outcome, Outcome::ConditionHolds);
}

TEST(Theorem2, CertifiesQuadraticShapes) {
  Gen g(61);
  for (int i = 0; i < 10; ++i) {
    const PlanarMap f = testing::deltaMM(g, static_cast<int>(g.between(2, 4)));
    EXPECT_EQ(find(theorem2(f), Criterion::T2i).outcome, Outcome::Certified) << toString(f);
  }
}

TEST(Theorem2, EvenDegreeLeadNonVanishing) {
  // m = 2, q_2 = x^2 + 1; d1m = x (x^2 + 1) - (x^2 + 1) x ... choose d1m with a zero.
  // P = y^2 + x y, Q = (x^2+1) y^2 + y: d1m = x (x^2+1) - 1, with one real zero.
  const PlanarMap f = parseMap("y^2 + x*y ; (x^2+1)*y^2 + y");
  const auto r = checkTheorem2(f, unknownClassification(f), CheckOptions{true, 0, 0});
  EXPECT_EQ(find(r, Criterion::T2i).outcome, Outcome::Failed);
  EXPECT_EQ(find(r, Criterion::T2iii).outcome, Outcome::Certified);
}

TEST(Theorem2, OddDegreeSignCondition) {
  // m = 3, P = x y^3 + y, Q = y^3 - y: d1m = 1 * 1 - (-1) * x = 1 + x, zero at -1.
  // q_3 = 1 != 0 there and q_1 q_3 = -1 <= 0.
  const PlanarMap f = parseMap("x*y^3 + y ; y^3 - y");
  const auto r = checkTheorem2(f, unknownClassification(f), CheckOptions{true, 0, 0});
  EXPECT_EQ(find(r, Criterion::T2iv).outcome, Outcome::Certified);
  EXPECT_EQ(find(r, Criterion::T2iii).outcome, Outcome::Skipped);
  // Q = y^3 + y flips the sign: q_1 q_3 = 1 > 0, and p_1 p_3 = x = -1 <= 0 at
  // the zero of d1m = 1 - x ... here d1m = 1 - x, zero at 1 where p_1 p_3 = 1.
  const PlanarMap h = parseMap("x*y^3 + y ; y^3 + y");
  const auto s = checkTheorem2(h, unknownClassification(h), CheckOptions{true, 0, 0});
  EXPECT_EQ(find(s, Criterion::T2iv).outcome, Outcome::Failed);
}

TEST(Theorem2, SubStripMonotonicity) {
  Gen g(62);
  for (int i = 0; i < 8; ++i) {
    PlanarMap f = testing::deltaMM(g, 2);
    ASSERT_EQ(find(theorem2(f), Criterion::T2i).outcome, Outcome::Certified);
    f.strip = g.strip(5);
    EXPECT_EQ(find(theorem2(f), Criterion::T2i).outcome, Outcome::Certified) << toString(f.strip);
  }
}

TEST(Theorem2, ShapeMismatchSkips) {
  const auto r = theorem2(parseMap("x + y^3 + y^2 ; y"));
  for (const auto& c : r) EXPECT_EQ(c.outcome, Outcome::Skipped);
}

TEST(TheoremL2h, CertifiesLevelShapes) {
  Gen g(63);
  for (int i = 0; i < 6; ++i) {
    const PlanarMap f = testing::deltaLMM(g, static_cast<int>(g.between(1, 3)), 2);
    const auto r = checkTheoremL2h(f, classify(f), {});
    EXPECT_EQ(r.front().outcome, Outcome::Certified) << r.front().detail;
  }
}

TEST(TheoremL2h, VanishingLinearCoefficientFails) {
  const PlanarMap f = parseMap("y^4 + 2*y^2 + x*y + x ; (x^2+1)*y^2 + x");
  const auto r = checkTheoremL2h(f, classify(f), {});
  EXPECT_EQ(r.front().outcome, Outcome::Failed);
  EXPECT_NE(r.front().detail.find("h = 1, L = 2"), std::string::npos);
}

TEST(Falsify, EvenFunctionCollides) {
  const PlanarMap f = parseMap("x ; y^2");
  const auto w = falsify(f, 10000, 1);
  expectCollision(f, w);
  EXPECT_EQ(w->first.x, w->second.x);
  EXPECT_EQ(w->first.y, -w->second.y);
}

TEST(Falsify, FoldCollapsesFibre) {
  const PlanarMap f = parseMap("x^2 ; x^2*y");
  const auto w = falsify(f, 10000, 2);
  expectCollision(f, w);
}

TEST(Falsify, InjectiveExampleHasNoWitness) {
  EXPECT_FALSE(falsify(parseMap("(x^2+1)*y + 2*x ; (x^2+1)*y + x"), 100000, 3).has_value());
}

TEST(Falsify, DeterministicAndRespectsStrip) {
  const PlanarMap f = parseMap("x^2 ; y^2 on (1/3, 1/2)");
  const auto a = falsify(f, 5000, 9);
  const auto b = falsify(f, 5000, 9);
  ASSERT_TRUE(a.has_value());
  EXPECT_EQ(a, b);
  EXPECT_TRUE(f.strip.contains(a->first.x));
  EXPECT_TRUE(f.strip.contains(a->second.x));
  EXPECT_THROW((void)falsify(f, 0, 0), Error);
}

TEST(Falsify, RationalCoefficientsWithLargeDenominators) {
  const PlanarMap f = parseMap("x ; 1/1000003*y^2");
  expectCollision(f, falsify(f, 10000, 4));
}

TEST(FibreCollapse, ExactWitness) {
  const PlanarMap f = parseMap("x^2 ; (x^2 - 1/4)*y + x");
  const auto w = fibreCollapseWitness(f);
  expectCollision(f, w);
  EXPECT_FALSE(fibreCollapseWitness(parseMap("x ; y^2")).has_value());
}

TEST(CheckInjectivity, PaperExamples) {
  const auto certified = checkInjectivity(parseMap("(x^2+1)*y + 2*x ; (x^2+1)*y + x"));
  ASSERT_TRUE(std::holds_alternative<InjectiveCertified>(certified.status));
  EXPECT_EQ(std::get<InjectiveCertified>(certified.status).criterion, Criterion::L3ii);

  const auto inconclusive = checkInjectivity(parseMap("x^3*y^2 + x ; x^3*y^2 + x + y"));
  ASSERT_TRUE(std::holds_alternative<Inconclusive>(inconclusive.status));

  const PlanarMap even = parseMap("x ; y^2");
  const auto witness = checkInjectivity(even);
  ASSERT_TRUE(std::holds_alternative<NotInjective>(witness.status));
  const auto& n = std::get<NotInjective>(witness.status);
  EXPECT_EQ(evalMap(even, n.a), evalMap(even, n.b));
}

TEST(CheckInjectivity, ClaimDoesNotOverrideSingularWitness) {
  // d_F = 3y; p_1 = 3x - 1 also has a simple zero.
  const PlanarMap f = parseMap("(3*x - 1)*y ; y");
  CheckOptions claim;
  claim.assumeNonSingular = true;
  claim.budget = 100;
  const auto v = checkInjectivity(f, claim);
  EXPECT_FALSE(std::holds_alternative<InjectiveCertified>(v.status));
}

TEST(CheckInjectivity, DecompositionChainCertifies) {
  // Levels over an odd m: no L3, T2 or T3 shape applies.
  Gen g(65);
  const PlanarMap f = testing::deltaLMM(g, 2, 3);
  CheckOptions o;
  o.budget = 1000;
  const auto v = checkInjectivity(f, o);
  ASSERT_TRUE(std::holds_alternative<InjectiveCertified>(v.status));
  EXPECT_EQ(std::get<InjectiveCertified>(v.status).criterion, Criterion::DecompositionChain);
}

TEST(CheckInjectivity, SoundOnGeneratedInjectiveMaps) {
  Gen g(64);
  CheckOptions o;
  o.budget = 2000;
  for (int i = 0; i < 40; ++i) {
    PlanarMap f;
    switch (i % 3) {
      case 0: f = composeChain(testing::shearChain(g, 4)); break;
      case 1: f = testing::deltaMM(g, 2); break;
      default: f = testing::deltaLMM(g, 2, 2); break;
    }
    o.seed = static_cast<std::uint64_t>(i);
    const auto v = checkInjectivity(f, o);
    EXPECT_FALSE(std::holds_alternative<NotInjective>(v.status)) << toString(f);
  }
}

}  // namespace
}  // namespace ytri
