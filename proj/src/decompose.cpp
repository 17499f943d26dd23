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
#include "ytri/decompose.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <utility>

namespace ytri {
namespace {

enum class Orientation { Normal, Swapped };

struct Builder {
  std::vector<AtomicMap> factors;
  std::vector<std::string> steps;
  int shears = 0;
};

std::string supportText(const BiPoly& p) {
  std::string out = "{";
  for (const int j : p.ySupport()) out += (out.size() > 1 ? ", " : "") + std::to_string(j);
  return out + "}";
}

/// Removes every y-power of target using powers of the degree-one pivot.
/// Normal: target is P, shear factors (x + c y^k, y). Swapped: target is Q,
/// triangular factors (x, y + c x^k).
void eliminate(BiPoly& target, const BiPoly& pivot, Orientation orientation, Builder& out) {
  const UniPoly& w = pivot.coeff(1);
  const char* tname = orientation == Orientation::Normal ? "p" : "q";
  const char* pname = orientation == Orientation::Normal ? "q" : "p";
  while (target.yDegree() >= 1) {
    const int k = target.yDegree();
    const auto c = proportionalityPower(target.coeff(k), w, k);
    if (!c) {
      throw Error(ErrorCode::ProportionalityFailed,
                  "stage " + std::to_string(k) + ": " + tname + "_" + std::to_string(k) + " = " +
                      toString(target.coeff(k)) + " is not a constant multiple of " + pname + "_1^" +
                      std::to_string(k) + " with " + pname + "_1 = " + toString(w));
    }
    target -= pivot.pow(static_cast<unsigned>(k)) * UniPoly::constant(*c);
    if (orientation == Orientation::Normal) {
      out.factors.push_back(makeShearX(-*c, k));
    } else {
      out.factors.push_back(makeTriangularX(1, 1, UniPoly::monomial(*c, k)));
    }
    ++out.shears;
    out.steps.push_back("stage " + std::to_string(k) + ": " + tname + "_" + std::to_string(k) + " = " +
                        toString(*c) + " * " + pname + "_1^" + std::to_string(k));
  }
}

void terminal(const BiPoly& reduced, const BiPoly& pivot, Orientation orientation, const Interval& strip,
              Builder& out) {
  const UniPoly& alpha = reduced.coeff(0);
  if (orientation == Orientation::Normal) {
    out.factors.push_back(makeQuasiTriangular(alpha, pivot.coeff(1), pivot.coeff(0), strip));
  } else {
    out.factors.push_back(makeSwappedQuasiTriangular(alpha, pivot.coeff(1), pivot.coeff(0), strip));
  }
  out.steps.push_back("terminal: " + kindName(out.factors.back()));
}

void requireNonSingularDelta(const PlanarMap& map) {
  const Classification c = classify(map);
  if (!c.isDeltaMap) {
    throw Error(ErrorCode::HypothesisViolated,
                "not a delta-map: d_F = " + toString(c.dF) + " depends on y");
  }
  if (const auto* s = std::get_if<Singular>(&c.nonSingularity)) {
    throw Error(ErrorCode::SingularInput, "singular input: " + s->detail);
  }
}

DecompositionReport finish(const PlanarMap& map, TheoremTag tag, Builder&& built) {
  DecompositionReport report;
  report.theorem = tag;
  report.chain = Chain{std::move(built.factors), map.strip};
  report.steps = std::move(built.steps);
  report.triangularCount = built.shears;
  report.quasiTriangularCount = 1;
  report.verified = composeChain(report.chain) == map;
  report.allTriangular = std::all_of(report.chain.factors.begin(), report.chain.factors.end(),
                                     [](const AtomicMap& f) { return isTriangular(f); });
  report.offset = {map.P(0, 0), map.Q(0, 0)};
  return report;
}

bool supportWithin(const BiPoly& p, const std::function<bool(int)>& allowed) {
  const auto support = p.ySupport();
  return std::all_of(support.begin(), support.end(), allowed);
}

/// Components carrying only y^0, y^1, y^m: one shear (x + c y, y) reduces the
/// first component to degree one, then the second is eliminated against it.
void corollaryOne(BiPoly P, BiPoly Q, int m, const Interval& strip, Builder& out) {
  const UniPoly pm = P.coeff(m);
  const UniPoly qm = Q.coeff(m);
  if (qm.isZero()) {
    if (Q.yDegree() != 1) throw Error(ErrorCode::HypothesisViolated, "q_m and q_1 both vanish");
    eliminate(P, Q, Orientation::Normal, out);
    terminal(P, Q, Orientation::Normal, strip, out);
    return;
  }
  if (!pm.isZero()) {
    const auto c = proportionality(pm, qm, 1, 1).constant;
    if (!c) {
      throw Error(ErrorCode::ProportionalityFailed, "stage " + std::to_string(m) + ": p_" + std::to_string(m) +
                                                         " = " + toString(pm) + " is not a constant multiple of q_" +
                                                         std::to_string(m) + " = " + toString(qm));
    }
    P -= Q * UniPoly::constant(*c);
    out.factors.push_back(makeShearX(-*c, 1));
    ++out.shears;
    out.steps.push_back("stage " + std::to_string(m) + ": p_" + std::to_string(m) + " = " + toString(*c) +
                        " * q_" + std::to_string(m));
  }
  if (P.yDegree() != 1) {
    throw Error(ErrorCode::HypothesisViolated,
                "after removing y^" + std::to_string(m) + " the first component has no y-term; "
                "the map cannot be non-singular");
  }
  eliminate(Q, P, Orientation::Swapped, out);
  terminal(Q, P, Orientation::Swapped, strip, out);
}

}  // namespace

std::string_view theoremName(TheoremTag tag) {
  switch (tag) {
    case TheoremTag::T1_type11: return "T1_type11";
    case TheoremTag::T4_deltaM1: return "T4_deltaM1";
    case TheoremTag::C1_deltaMM: return "C1_deltaMM";
    case TheoremTag::T5_deltaLMM: return "T5_deltaLMM";
  }
  return "unknown";
}

ProportionalityResult proportionality(const UniPoly& p, const UniPoly& q, int h, int k) {
  if (h < 1 || k < 1) throw Error(ErrorCode::InvalidArgument, "proportionality: exponents must be positive");
  if (q.isZero() && !p.isZero()) throw Error(ErrorCode::NoConstant, "no constant exists: q vanishes identically");
  ProportionalityResult out;
  out.relationHolds =
      (p.derivative() * q * Rational(h) - q.derivative() * p * Rational(k)).isZero();
  if (p.isZero()) {
    out.constant = Rational(0);
    return out;
  }
  const UniPoly ph = p.pow(static_cast<unsigned>(h));
  const UniPoly qk = q.pow(static_cast<unsigned>(k));
  if (ph.degree() != qk.degree()) return out;
  const Rational c = ph.lead() / qk.lead();
  if (ph == qk * c) out.constant = c;
  return out;
}

std::optional<Rational> proportionalityPower(const UniPoly& p, const UniPoly& q, int l) {
  return proportionality(p, q, 1, l).constant;
}

DecompositionReport decomposeType11(const PlanarMap& map) {
  const MapType type = mapType(map);
  if (type.m > 1 || type.n > 1 || (map.P.yDegree() < 1 && map.Q.yDegree() < 1)) {
    throw Error(ErrorCode::ShapeMismatch, "shape mismatch: type (" + std::to_string(type.m) + "," +
                                              std::to_string(type.n) + ") is not (1,1), (0,1) or (1,0)");
  }
  const UniPoly& p1 = map.P.coeff(1);
  const UniPoly& q1 = map.Q.coeff(1);
  if (!p1.isZero() && !q1.isZero() && !(p1.derivative() * q1 - p1 * q1.derivative()).isZero()) {
    throw Error(ErrorCode::HypothesisViolated, "hypothesis violated: p1'q1 - p1q1' is not identically zero");
  }
  requireNonSingularDelta(map);
  Builder out;
  BiPoly P = map.P;
  BiPoly Q = map.Q;
  if (q1.isZero()) {
    terminal(Q, P, Orientation::Swapped, map.strip, out);
  } else {
    eliminate(P, Q, Orientation::Normal, out);
    terminal(P, Q, Orientation::Normal, map.strip, out);
  }
  return finish(map, TheoremTag::T1_type11, std::move(out));
}

DecompositionReport decomposeDeltaM1(const PlanarMap& map) {
  if (map.Q.yDegree() != 1) {
    throw Error(ErrorCode::ShapeMismatch, "shape mismatch: type (m,1) needs Q of y-degree 1, got " +
                                              std::to_string(std::max(map.Q.yDegree(), 0)));
  }
  requireNonSingularDelta(map);
  Builder out;
  BiPoly P = map.P;
  eliminate(P, map.Q, Orientation::Normal, out);
  terminal(P, map.Q, Orientation::Normal, map.strip, out);
  return finish(map, TheoremTag::T4_deltaM1, std::move(out));
}

DecompositionReport decomposeDeltaMM(const PlanarMap& map) {
  const int m = std::max(map.P.yDegree(), map.Q.yDegree());
  const auto allowed = [m](int j) { return j == 0 || j == 1 || j == m; };
  if (m < 2 || !supportWithin(map.P, allowed) || !supportWithin(map.Q, allowed)) {
    throw Error(ErrorCode::ShapeMismatch, "not Corollary-1 shape: y-supports " + supportText(map.P) + " and " +
                                              supportText(map.Q) + " must lie in {0, 1, m} with m >= 2");
  }
  requireNonSingularDelta(map);
  Builder out;
  corollaryOne(map.P, map.Q, m, map.strip, out);
  return finish(map, TheoremTag::C1_deltaMM, std::move(out));
}

DecompositionReport decomposeDeltaLMM(const PlanarMap& map) {
  const int m = map.Q.yDegree();
  const bool qShape = m >= 2 && supportWithin(map.Q, [m](int j) { return j == 0 || j == m; });
  const bool pShape = qShape && map.P.yDegree() >= m && map.P.yDegree() % m == 0 &&
                      supportWithin(map.P, [m](int j) { return j <= 1 || j % m == 0; });
  if (!pShape) {
    throw Error(ErrorCode::ShapeMismatch, "shape mismatch: y-supports " + supportText(map.P) + " and " +
                                              supportText(map.Q) +
                                              " do not match sum_l p_lm y^lm + p_1 y + p_0 ; q_m y^m + q_0");
  }
  requireNonSingularDelta(map);
  const int levels = map.P.yDegree() / m;
  const UniPoly qm = map.Q.coeff(m);
  Builder out;
  BiPoly P = map.P;
  for (int l = levels; l >= 2; --l) {
    const UniPoly& plm = P.coeff(l * m);
    if (plm.isZero()) {
      out.steps.push_back("stage " + std::to_string(l) + ": p_" + std::to_string(l * m) + " = 0, no shear");
      continue;
    }
    const auto c = proportionalityPower(plm, qm, l);
    if (!c) {
      throw Error(ErrorCode::ProportionalityFailed,
                  "stage " + std::to_string(l) + ": p_" + std::to_string(l * m) + " = " + toString(plm) +
                      " is not a constant multiple of q_" + std::to_string(m) + "^" + std::to_string(l));
    }
    P -= map.Q.pow(static_cast<unsigned>(l)) * UniPoly::constant(*c);
    out.factors.push_back(makeShearX(-*c, l));
    ++out.shears;
    out.steps.push_back("stage " + std::to_string(l) + ": p_" + std::to_string(l * m) + " = " + toString(*c) +
                        " * q_" + std::to_string(m) + "^" + std::to_string(l));
  }
  corollaryOne(std::move(P), map.Q, m, map.strip, out);
  return finish(map, TheoremTag::T5_deltaLMM, std::move(out));
}

NotDecomposable::NotDecomposable(std::vector<ShapeDiagnosis> diagnosis)
    : Error(ErrorCode::NotDecomposable, "no decomposition route applies"), diagnosis_(std::move(diagnosis)) {}

DecompositionReport decomposeDispatch(const PlanarMap& map) {
  std::vector<ShapeDiagnosis> diagnosis;
  const auto attempt = [&](TheoremTag tag, auto&& fn) -> std::optional<DecompositionReport> {
    try {
      return fn(map);
    } catch (const Error& e) {
      diagnosis.push_back({tag, e.code(), e.what()});
      return std::nullopt;
    }
  };
  if (map.P.yDegree() == 1) {
    if (auto r = attempt(TheoremTag::T1_type11, decomposeType11)) return *r;
  } else {
    diagnosis.push_back({TheoremTag::T1_type11, ErrorCode::ShapeMismatch,
                         "shape mismatch: P has y-degree " + std::to_string(std::max(map.P.yDegree(), 0)) +
                             ", not 1"});
  }
  if (auto r = attempt(TheoremTag::T4_deltaM1, decomposeDeltaM1)) return *r;
  if (auto r = attempt(TheoremTag::C1_deltaMM, decomposeDeltaMM)) return *r;
  if (auto r = attempt(TheoremTag::T5_deltaLMM, decomposeDeltaLMM)) return *r;
  throw NotDecomposable(std::move(diagnosis));
}

}  // namespace ytri
