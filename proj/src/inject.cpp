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
#include "ytri/inject.hpp"

#include <gmp.h>

#include <algorithm>
#include <array>
#include <limits>
#include <numeric>
#include <random>
#include <unordered_map>

#include "ytri/decompose.hpp"
#include "ytri/error.hpp"
#include "ytri/overloaded.hpp"

namespace ytri {
namespace {

Outcome outcomeFor(bool holds, const NonSingularBasis& basis) {
  if (!holds) return Outcome::Failed;
  return basis.usable ? Outcome::Certified : Outcome::ConditionHolds;
}

std::string withBasis(std::string detail, bool holds, const NonSingularBasis& basis) {
  if (holds && !basis.usable) detail += "; not certified: " + basis.note;
  return detail;
}

bool supportWithin(const BiPoly& p, int m) {
  const auto support = p.ySupport();
  return std::all_of(support.begin(), support.end(), [m](int j) { return j == 0 || j == 1 || j == m; });
}

/// Roots of p in the interval, named exactly when rational.
std::string describeZeros(const UniPoly& p, const Interval& interval) {
  const auto rational = rationalRoots(p, interval);
  const int total = countRoots(p, interval);
  std::string out;
  for (const auto& r : rational) out += (out.empty() ? "" : ", ") + toString(r);
  if (static_cast<int>(rational.size()) == total) return "at " + out;
  const std::string irrational = std::to_string(total - static_cast<int>(rational.size())) + " irrational point(s)";
  return out.empty() ? "at " + irrational : "at " + out + " and " + irrational;
}

/// No zero of d1m in the interval is a zero of other.
bool noSharedZero(const UniPoly& d1m, const UniPoly& other, const Interval& interval) {
  if (other.isZero()) return countRoots(d1m, interval) == 0;
  const UniPoly g = gcd(d1m, other);
  return g.degree() < 1 || countRoots(g, interval) == 0;
}

bool productNonPositiveAtZeros(const UniPoly& product, const UniPoly& d1m, const Interval& interval) {
  const auto verdicts = signAtRoots(product, d1m, interval);
  return std::all_of(verdicts.begin(), verdicts.end(),
                     [](const RootSignVerdict& v) { return v.sign != RootSign::Positive; });
}

std::string sub(const char* letter, int index) { return std::string(letter) + "_" + std::to_string(index); }

// Modular fingerprinting for the falsifier.

using u64 = std::uint64_t;

u64 mulMod(u64 a, u64 b, u64 p) {
  return static_cast<u64>(static_cast<unsigned __int128>(a) * b % p);
}

u64 powMod(u64 base, u64 exponent, u64 p) {
  u64 out = 1;
  while (exponent > 0) {
    if (exponent & 1U) out = mulMod(out, base, p);
    base = mulMod(base, base, p);
    exponent >>= 1U;
  }
  return out;
}

u64 integerResidue(const Integer& n, u64 p) {
  return mpz_fdiv_ui(n.get_mpz_t(), static_cast<unsigned long>(p));  // NOLINT(google-runtime-int)
}

u64 integerResidue(std::int64_t n, u64 p) {
  const auto r = static_cast<u64>(n < 0 ? -(n + 1) : n) % p;
  return n < 0 ? (p - 1 - r) % p : r;
}

std::optional<u64> rationalResidue(const Rational& q, u64 p) {
  const u64 den = integerResidue(q.get_den(), p);
  if (den == 0) return std::nullopt;
  return mulMod(integerResidue(q.get_num(), p), powMod(den, p - 2, p), p);
}

u64 primeNear(unsigned bits) {
  Integer start = Integer(1) << bits;
  Integer prime;
  mpz_nextprime(prime.get_mpz_t(), start.get_mpz_t());
  return prime.get_ui();
}

/// Residues of a BiPoly, indexed [y-degree][x-degree].
struct ModPoly {
  std::vector<std::vector<u64>> coeffs;
  u64 p = 0;

  u64 operator()(u64 x, u64 y) const {
    u64 acc = 0;
    for (auto row = coeffs.rbegin(); row != coeffs.rend(); ++row) {
      u64 c = 0;
      for (auto it = row->rbegin(); it != row->rend(); ++it) c = (mulMod(c, x, p) + *it) % p;
      acc = (mulMod(acc, y, p) + c) % p;
    }
    return acc;
  }
};

std::optional<ModPoly> reduce(const BiPoly& f, u64 p) {
  ModPoly out;
  out.p = p;
  for (const UniPoly& c : f.coeffs()) {
    std::vector<u64> row;
    for (const Rational& a : c.coeffs()) {
      const auto r = rationalResidue(a, p);
      if (!r) return std::nullopt;
      row.push_back(*r);
    }
    out.coeffs.push_back(std::move(row));
  }
  return out;
}

/// Small-height grid point: x = xBase + xStep * xn/xd, y = yn/yd.
struct Sample {
  std::int64_t xn;
  std::int64_t xd;
  std::int64_t yn;
  std::int64_t yd;
  friend bool operator==(const Sample& a, const Sample& b) = default;
};

struct Sampler {
  std::mt19937_64 engine;

  u64 below(u64 n) {
    const u64 limit = std::numeric_limits<u64>::max() - std::numeric_limits<u64>::max() % n;
    u64 r = engine();
    while (r >= limit) r = engine();
    return r % n;
  }

  /// n/d with d in [1, 2^level], level in [0, 6], n/d in [lo, hi].
  std::pair<std::int64_t, std::int64_t> fraction(std::int64_t lo, std::int64_t hi) {
    const u64 level = below(7);
    const auto d = static_cast<std::int64_t>(1 + below(u64{1} << level));
    const std::int64_t n = lo * d + static_cast<std::int64_t>(below(static_cast<u64>((hi - lo) * d + 1)));
    const std::int64_t g = std::gcd(n, d);
    return {n / g, d / g};
  }
};

constexpr std::int64_t kGridHalfWidth = 16;
constexpr std::int64_t kGridSteps = 32;

}  // namespace

std::string_view criterionName(Criterion criterion) {
  switch (criterion) {
    case Criterion::L3i: return "L3i";
    case Criterion::L3ii: return "L3ii";
    case Criterion::L3iii: return "L3iii";
    case Criterion::T2i: return "T2i";
    case Criterion::T2ii: return "T2ii";
    case Criterion::T2iii: return "T2iii";
    case Criterion::T2iv: return "T2iv";
    case Criterion::T3: return "T3";
    case Criterion::DecompositionChain: return "DecompositionChain";
  }
  return "unknown";
}

std::string_view outcomeName(Outcome outcome) {
  switch (outcome) {
    case Outcome::Certified: return "certified";
    case Outcome::ConditionHolds: return "condition-holds";
    case Outcome::Failed: return "failed";
    case Outcome::Skipped: return "skipped";
    case Outcome::Contradiction: return "contradiction";
  }
  return "unknown";
}

NonSingularBasis nonSingularBasis(const Classification& classification, const CheckOptions& options) {
  return std::visit(
      Overloaded{
          [](const NonSingular& n) { return NonSingularBasis{true, true, "non-singular: " + n.certificate}; },
          [](const Singular& s) { return NonSingularBasis{false, false, "singular: " + s.detail}; },
          [&](const UnknownSingularity& u) {
            if (options.assumeNonSingular) return NonSingularBasis{true, false, "non-singularity claimed by caller"};
            return NonSingularBasis{false, false, "non-singularity unknown: " + u.reason};
          },
      },
      classification.nonSingularity);
}

std::vector<CriterionResult> checkLemma3(const PlanarMap& map, const Classification& classification,
                                         const CheckOptions& options) {
  const NonSingularBasis basis = nonSingularBasis(classification, options);
  const Interval& strip = map.strip;
  std::vector<CriterionResult> out;
  const int pDeg = map.P.yDegree();
  const int qDeg = map.Q.yDegree();
  const std::string typeText =
      "type (" + std::to_string(std::max(pDeg, 0)) + "," + std::to_string(std::max(qDeg, 0)) + ")";

  if (pDeg <= 0 && qDeg == 1) {
    out.push_back({Criterion::L3i, outcomeFor(true, basis), withBasis(typeText, true, basis)});
  } else {
    out.push_back({Criterion::L3i, Outcome::Skipped, "shape mismatch: " + typeText + " is not (0,1)"});
  }

  if (pDeg == 1 || qDeg == 1) {
    const bool pSide = pDeg == 1 && isNonVanishing(map.P.coeff(1), strip);
    const bool qSide = !pSide && qDeg == 1 && isNonVanishing(map.Q.coeff(1), strip);
    std::string detail;
    if (pSide) {
      detail = "p_1 = " + toString(map.P.coeff(1)) + " has no zero in I";
    } else if (qSide) {
      detail = "q_1 = " + toString(map.Q.coeff(1)) + " has no zero in I";
    } else {
      if (pDeg == 1) detail = "p_1 = " + toString(map.P.coeff(1)) + " vanishes " + describeZeros(map.P.coeff(1), strip);
      if (qDeg == 1) {
        detail += std::string(detail.empty() ? "" : "; ") + "q_1 = " + toString(map.Q.coeff(1)) + " vanishes " +
                  describeZeros(map.Q.coeff(1), strip);
      }
    }
    out.push_back({Criterion::L3ii, outcomeFor(pSide || qSide, basis), withBasis(detail, pSide || qSide, basis)});
  } else {
    out.push_back({Criterion::L3ii, Outcome::Skipped, "shape mismatch: neither component has y-degree 1"});
  }

  if (pDeg == 1) {
    const UniPoly& p1 = map.P.coeff(1);
    if (hasSimpleZero(p1, strip)) {
      const std::string detail = "p_1 = " + toString(p1) + " has a simple zero in I";
      if (basis.certified) {
        throw Error(ErrorCode::InternalContradiction, "certified non-singular map with " + detail);
      }
      if (basis.usable) {
        out.push_back({Criterion::L3iii, Outcome::Contradiction, "input cannot be non-singular: " + detail});
      } else {
        out.push_back({Criterion::L3iii, Outcome::Failed, detail + ", so d_F vanishes on the strip"});
      }
    } else {
      out.push_back({Criterion::L3iii, Outcome::ConditionHolds,
                     "p_1 has no simple zero in I (necessary condition only)"});
    }
  } else {
    out.push_back({Criterion::L3iii, Outcome::Skipped, "shape mismatch: p has y-degree other than 1"});
  }
  return out;
}

std::vector<CriterionResult> checkTheorem2(const PlanarMap& map, const Classification& classification,
                                           const CheckOptions& options) {
  const std::array<Criterion, 4> tags{Criterion::T2i, Criterion::T2ii, Criterion::T2iii, Criterion::T2iv};
  const int m = std::max(map.P.yDegree(), map.Q.yDegree());
  std::string mismatch;
  if (m < 2) {
    mismatch = "shape mismatch: y-degree " + std::to_string(std::max(m, 0)) + " < 2";
  } else if (!supportWithin(map.P, m) || !supportWithin(map.Q, m)) {
    mismatch = "shape mismatch: y-powers outside {0, 1, " + std::to_string(m) + "}";
  } else if (map.P.coeff(m).isZero() || map.Q.coeff(m).isZero()) {
    mismatch = "shape mismatch: " + sub(map.P.coeff(m).isZero() ? "p" : "q", m) + " vanishes identically";
  }
  std::vector<CriterionResult> out;
  if (!mismatch.empty()) {
    for (const Criterion tag : tags) out.push_back({tag, Outcome::Skipped, mismatch});
    return out;
  }

  const NonSingularBasis basis = nonSingularBasis(classification, options);
  const Interval& strip = map.strip;
  const LeadingPairData lp = leadingPairData(map);
  const UniPoly& pm = map.P.coeff(m);
  const UniPoly& qm = map.Q.coeff(m);
  const UniPoly& p1 = map.P.coeff(1);
  const UniPoly& q1 = map.Q.coeff(1);
  const std::string d1mText = "d1m = " + toString(lp.d1m);
  const bool d1mZero = lp.d1m.isZero();
  const bool d1mHasZeros = !d1mZero && countRoots(lp.d1m, strip) > 0;
  const std::string zeros = d1mHasZeros ? describeZeros(lp.d1m, strip) : "";

  const auto record = [&](Criterion tag, bool holds, const std::string& detail) {
    out.push_back({tag, outcomeFor(holds, basis), withBasis(detail, holds, basis)});
  };

  // i
  if (d1mZero) {
    record(Criterion::T2i, false, "d1m = 0 identically");
  } else {
    record(Criterion::T2i, !d1mHasZeros,
           d1mHasZeros ? d1mText + " vanishes " + zeros : d1mText + " has no zero in I");
  }

  // ii
  if (d1mZero) {
    record(Criterion::T2ii, false, "d1m = 0 identically");
  } else if (!d1mHasZeros) {
    record(Criterion::T2ii, true, d1mText + " has no zero in I");
  } else if (lp.d1mStar.isZero()) {
    record(Criterion::T2ii, false, "d1mStar = 0 identically");
  } else {
    const bool holds = noSharedZero(lp.d1m, lp.d1mStar, strip);
    record(Criterion::T2ii, holds,
           holds ? "d1mStar = " + toString(lp.d1mStar) + " is nonzero at every zero of d1m"
                 : d1mText + " and d1mStar = " + toString(lp.d1mStar) + " share a zero in I");
  }

  const std::string parity = "m = " + std::to_string(m) + " is ";
  // iii
  if (m % 2 != 0) {
    out.push_back({Criterion::T2iii, Outcome::Skipped, parity + "odd"});
  } else if (d1mZero) {
    record(Criterion::T2iii, false, "d1m = 0 identically");
  } else if (noSharedZero(lp.d1m, qm, strip)) {
    record(Criterion::T2iii, true, sub("q", m) + " = " + toString(qm) + " is nonzero at every zero of d1m");
  } else if (noSharedZero(lp.d1m, pm, strip)) {
    record(Criterion::T2iii, true, sub("p", m) + " = " + toString(pm) + " is nonzero at every zero of d1m");
  } else {
    record(Criterion::T2iii, false,
           d1mText + " shares a zero with " + sub("q", m) + " = " + toString(qm) + " and with " + sub("p", m) +
               " = " + toString(pm));
  }

  // iv: at each zero x0 of d1m, q_m(x0) != 0 and q_1(x0) q_m(x0) <= 0.
  if (m % 2 == 0) {
    out.push_back({Criterion::T2iv, Outcome::Skipped, parity + "even"});
  } else if (d1mZero) {
    record(Criterion::T2iv, false, "d1m = 0 identically");
  } else {
    std::string detail;
    bool holds = false;
    for (const bool qSide : {true, false}) {
      const UniPoly& lead = qSide ? qm : pm;
      const UniPoly& linear = qSide ? q1 : p1;
      const char* letter = qSide ? "q" : "p";
      const std::string pair = sub(letter, 1) + "*" + sub(letter, m);
      std::string reason;
      if (!noSharedZero(lp.d1m, lead, strip)) {
        reason = d1mText + " shares a zero with " + sub(letter, m) + " = " + toString(lead);
      } else if (!productNonPositiveAtZeros(linear * lead, lp.d1m, strip)) {
        reason = pair + " is positive at a zero of d1m";
      } else {
        detail = sub(letter, m) + " != 0 and " + pair + " <= 0 at every zero of d1m";
        holds = true;
        break;
      }
      detail += (detail.empty() ? "" : "; ") + reason;
    }
    record(Criterion::T2iv, holds, detail);
  }
  return out;
}

std::vector<CriterionResult> checkTheoremL2h(const PlanarMap& map, const Classification& classification,
                                             const CheckOptions& options) {
  const int twoH = map.Q.yDegree();
  const auto qSupport = map.Q.ySupport();
  const auto pSupport = map.P.ySupport();
  const bool qShape = twoH >= 2 && twoH % 2 == 0 &&
                      std::all_of(qSupport.begin(), qSupport.end(), [twoH](int j) { return j == 0 || j == twoH; });
  const bool pShape = qShape && map.P.yDegree() >= twoH &&
                      std::all_of(pSupport.begin(), pSupport.end(),
                                  [twoH](int j) { return j <= 1 || j % twoH == 0; });
  if (!pShape) {
    return {{Criterion::T3, Outcome::Skipped,
             "shape mismatch: not (sum p_{2hl} y^{2hl} + p_1 y + p_0, q_{2h} y^{2h} + q_0)"}};
  }
  const NonSingularBasis basis = nonSingularBasis(classification, options);
  const int h = twoH / 2;
  const int levels = map.P.yDegree() / twoH;
  const UniPoly& p1 = map.P.coeff(1);
  const bool holds = isNonVanishing(p1, map.strip);
  std::string detail = "h = " + std::to_string(h) + ", L = " + std::to_string(levels) + "; p_1 = " + toString(p1);
  if (holds) {
    detail += " has no zero in I";
  } else if (p1.isZero()) {
    detail += " is identically zero";
  } else {
    detail += " vanishes " + describeZeros(p1, map.strip);
  }
  return {{Criterion::T3, outcomeFor(holds, basis), withBasis(detail, holds, basis)}};
}

std::optional<std::pair<Point, Point>> fibreCollapseWitness(const PlanarMap& map) {
  UniPoly g;
  for (const BiPoly* f : {&map.P, &map.Q}) {
    for (int j = 1; j <= f->yDegree(); ++j) {
      if (!f->coeff(j).isZero()) g = gcd(g, f->coeff(j));
    }
  }
  std::optional<Rational> r;
  if (g.isZero()) {
    r = pointInside(map.strip);
  } else if (g.degree() >= 1) {
    const auto roots = rationalRoots(g, map.strip);
    if (!roots.empty()) r = roots.front();
  }
  if (!r) return std::nullopt;
  Point a{*r, 0};
  Point b{*r, 1};
  if (evalMap(map, a) != evalMap(map, b)) {
    throw Error(ErrorCode::InternalContradiction, "fibre collapse witness does not collide");
  }
  return std::make_pair(a, b);
}

std::optional<std::pair<Point, Point>> falsify(const PlanarMap& map, std::uint64_t budget, std::uint64_t seed) {
  if (budget == 0) throw Error(ErrorCode::InvalidArgument, "falsify: budget must be at least 1");

  // x = xBase + xStep * t with t on a grid in [0, 32], covering the strip
  // around pointInside within distance 16.
  const Rational centre = pointInside(map.strip);
  Rational lo = centre - kGridHalfWidth;
  Rational hi = centre + kGridHalfWidth;
  if (map.strip.lower && *map.strip.lower > lo) lo = *map.strip.lower;
  if (map.strip.upper && *map.strip.upper < hi) hi = *map.strip.upper;
  const Rational xBase = lo;
  const Rational xStep = (hi - lo) / kGridSteps;
  const bool lowEdgeOpen = map.strip.lower && *map.strip.lower == lo;
  const bool highEdgeOpen = map.strip.upper && *map.strip.upper == hi;

  static const std::array<u64, 2> primes{primeNear(61), primeNear(62)};
  std::array<std::optional<ModPoly>, 4> mod{reduce(map.P, primes[0]), reduce(map.Q, primes[0]),
                                            reduce(map.P, primes[1]), reduce(map.Q, primes[1])};
  std::array<std::optional<u64>, 4> base{rationalResidue(xBase, primes[0]), rationalResidue(xStep, primes[0]),
                                         rationalResidue(xBase, primes[1]), rationalResidue(xStep, primes[1])};
  const bool modular = std::all_of(mod.begin(), mod.end(), [](const auto& m) { return m.has_value(); }) &&
                       std::all_of(base.begin(), base.end(), [](const auto& b) { return b.has_value(); });

  const auto toPoint = [&](const Sample& s) {
    return Point{xBase + xStep * Rational(s.xn, s.xd), Rational(s.yn, s.yd)};
  };
  // Sample denominators never exceed 2^6.
  static const auto inverses = [] {
    std::array<std::array<u64, 65>, 2> table{};
    for (int k = 0; k < 2; ++k) {
      for (u64 d = 1; d <= 64; ++d) table[k][d] = powMod(d, primes[k] - 2, primes[k]);
    }
    return table;
  }();
  const auto fingerprint = [&](const Sample& s) -> std::array<u64, 4> {
    std::array<u64, 4> out{};
    for (int k = 0; k < 2; ++k) {
      const u64 p = primes[k];
      const u64 t = mulMod(integerResidue(s.xn, p), inverses[k][static_cast<std::size_t>(s.xd)], p);
      const u64 x = (*base[2 * k] + mulMod(*base[2 * k + 1], t, p)) % p;
      const u64 y = mulMod(integerResidue(s.yn, p), inverses[k][static_cast<std::size_t>(s.yd)], p);
      out[2 * k] = (*mod[2 * k])(x, y);
      out[2 * k + 1] = (*mod[2 * k + 1])(x, y);
    }
    return out;
  };

  Sampler sampler{std::mt19937_64(seed)};
  std::vector<Sample> samples;
  samples.reserve(static_cast<std::size_t>(std::min<u64>(budget, 1U << 20)));
  std::unordered_map<u64, std::vector<std::size_t>> buckets;
  std::unordered_map<std::string, std::vector<std::size_t>> exactBuckets;

  for (u64 drawn = 0; drawn < budget; ++drawn) {
    Sample s{};
    for (;;) {
      const auto [tn, td] = sampler.fraction(0, kGridSteps);
      if ((tn == 0 && lowEdgeOpen) || (tn == kGridSteps * td && highEdgeOpen)) continue;
      const auto [yn, yd] = sampler.fraction(-kGridHalfWidth, kGridHalfWidth);
      s = Sample{tn, td, yn, yd};
      break;
    }
    std::vector<std::size_t>* bucket = nullptr;
    if (modular) {
      const auto f = fingerprint(s);
      const u64 key = f[0] ^ (f[1] * 0x9E3779B97F4A7C15ULL) ^ (f[2] * 0xC2B2AE3D27D4EB4FULL) ^
                      (f[3] * 0x165667B19E3779F9ULL);
      bucket = &buckets[key];
    } else {
      const Point image = evalMap(map, toPoint(s));
      bucket = &exactBuckets[toString(image.x) + "," + toString(image.y)];
    }
    bool duplicate = false;
    for (const std::size_t j : *bucket) {
      if (samples[j] == s) {
        duplicate = true;
        break;
      }
      const Point a = toPoint(samples[j]);
      const Point b = toPoint(s);
      if (evalMap(map, a) == evalMap(map, b)) return std::make_pair(a, b);
    }
    if (duplicate) continue;
    bucket->push_back(samples.size());
    samples.push_back(s);
  }
  return std::nullopt;
}

InjectivityVerdict checkInjectivity(const PlanarMap& map, const CheckOptions& options) {
  InjectivityVerdict verdict;
  const Classification classification = classify(map);
  const NonSingularBasis basis = nonSingularBasis(classification, options);

  if (classification.singular()) {
    if (auto witness = fibreCollapseWitness(map)) {
      verdict.status = NotInjective{witness->first, witness->second};
      return verdict;
    }
  }

  for (auto&& part : {checkLemma3(map, classification, options), checkTheorem2(map, classification, options),
                      checkTheoremL2h(map, classification, options)}) {
    verdict.criteria.insert(verdict.criteria.end(), part.begin(), part.end());
  }
  const bool refuted = std::any_of(verdict.criteria.begin(), verdict.criteria.end(),
                                   [](const CriterionResult& r) { return r.outcome == Outcome::Contradiction; });
  std::optional<Criterion> certified;
  if (!refuted) {
    for (const auto& r : verdict.criteria) {
      if (r.outcome == Outcome::Certified) {
        certified = r.tag;
        break;
      }
    }
  }

  if (!certified) {
    try {
      const DecompositionReport report = decomposeDispatch(map);
      const bool factorsCertified = std::all_of(report.chain.factors.begin(), report.chain.factors.end(),
                                                [](const AtomicMap& f) { return certificateHolds(f); });
      if (report.verified && factorsCertified) {
        certified = Criterion::DecompositionChain;
        verdict.criteria.push_back({Criterion::DecompositionChain, Outcome::Certified,
                                    std::string(theoremName(report.theorem)) + ": " +
                                        std::to_string(report.chain.factors.size()) + " injective factors"});
      } else {
        verdict.criteria.push_back(
            {Criterion::DecompositionChain, Outcome::Failed, "chain did not verify against the input"});
      }
    } catch (const NotDecomposable& e) {
      std::string detail;
      for (const auto& d : e.diagnosis()) {
        detail += (detail.empty() ? "" : "; ") + std::string(theoremName(d.theorem)) + ": " + d.reason;
      }
      verdict.criteria.push_back({Criterion::DecompositionChain, Outcome::Failed, detail});
    }
  }

  if (options.budget > 0) {
    verdict.samples = options.budget;
    if (auto witness = falsify(map, options.budget, options.seed)) {
      if (certified) {
        throw Error(ErrorCode::InternalContradiction,
                    "criterion " + std::string(criterionName(*certified)) + " certified a map with collision " +
                        toString(witness->first) + " ~ " + toString(witness->second));
      }
      verdict.status = NotInjective{witness->first, witness->second};
      return verdict;
    }
  }

  if (certified) {
    verdict.status = InjectiveCertified{*certified};
    return verdict;
  }
  Inconclusive inconclusive;
  if (!basis.usable) inconclusive.reasons.push_back(basis.note);
  for (const auto& r : verdict.criteria) {
    inconclusive.reasons.push_back(std::string(criterionName(r.tag)) + " " + std::string(outcomeName(r.outcome)) +
                                   ": " + r.detail);
  }
  if (options.budget > 0) {
    inconclusive.reasons.push_back("falsifier: no collision among " + std::to_string(options.budget) +
                                   " samples (seed " + std::to_string(options.seed) + ")");
  }
  verdict.status = std::move(inconclusive);
  return verdict;
}

}  // namespace ytri
