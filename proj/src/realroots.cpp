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
#include "ytri/realroots.hpp"

#include <algorithm>
#include <optional>
#include <utility>

#include "ytri/error.hpp"

namespace ytri {
namespace {

void requireNonZero(const UniPoly& p, const char* what) {
  if (p.isZero()) throw Error(ErrorCode::ZeroPolynomial, std::string(what) + ": zero polynomial");
}

/// Strips a root sitting exactly on an open-interval endpoint.
UniPoly dropRootAt(UniPoly sf, const Rational& at) {
  if (sf.degree() >= 1 && sf(at) == 0) sf = exactDiv(sf, UniPoly{-at, 1});
  return sf;
}

/// Squarefree polynomial with no roots on the finite endpoints, plus finite
/// Sturm endpoints enclosing every root of it inside the interval.
struct Prepared {
  UniPoly poly;
  Rational lo;
  Rational hi;
  bool empty = false;
};

Prepared prepare(const UniPoly& p, const Interval& interval) {
  Prepared out;
  UniPoly sf = squarefreePart(p);
  const Rational bound = sf.degree() >= 1 ? cauchyBound(sf) : Rational(1);
  if (interval.lower) sf = dropRootAt(std::move(sf), *interval.lower);
  if (interval.upper) sf = dropRootAt(std::move(sf), *interval.upper);
  out.lo = interval.lower ? *interval.lower : Rational(-bound);
  out.hi = interval.upper ? *interval.upper : Rational(bound);
  if (interval.lower && !interval.upper && out.hi <= out.lo) out.hi = out.lo + 1;
  if (interval.upper && !interval.lower && out.lo >= out.hi) out.lo = out.hi - 1;
  out.empty = sf.degree() < 1;
  out.poly = std::move(sf);
  return out;
}

/// Fractions 1/2, 1/3, 2/3, 1/4, 3/4, ... used to pick split points that
/// avoid roots.
Rational splitFraction(int index) {
  int k = 2;
  while (index >= k - 1) {
    index -= k - 1;
    ++k;
  }
  Rational t(index + 1, k);
  t.canonicalize();
  return t;
}

struct BisectOutcome {
  std::optional<IsolatingInterval> interval;
  std::optional<Rational> exactRoot;
};

/// One bisection step on an isolating interval of a squarefree polynomial.
BisectOutcome bisectOnce(const UniPoly& sf, const IsolatingInterval& iv) {
  const Rational mid = (iv.lower + iv.upper) / 2;
  const int sm = sign(sf(mid));
  if (sm == 0) return {std::nullopt, mid};
  IsolatingInterval next = iv;
  if (sm == sign(sf(iv.lower))) {
    next.lower = mid;
  } else {
    next.upper = mid;
  }
  return {next, std::nullopt};
}

}  // namespace

int SturmSequence::variations(const Rational& at) const {
  int count = 0;
  int last = 0;
  for (const auto& p : polynomials) {
    const int s = sign(p(at));
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

SturmSequence sturmSequence(const UniPoly& p) {
  requireNonZero(p, "sturmSequence");
  SturmSequence seq;
  seq.polynomials.push_back(p);
  UniPoly prev = p;
  UniPoly cur = p.derivative();
  while (!cur.isZero()) {
    seq.polynomials.push_back(cur);
    UniPoly next = -divmod(prev, cur).remainder;
    // Positive rescaling keeps signs and tames coefficient growth.
    if (!next.isZero()) next *= Rational(1 / abs(next.lead()));
    prev = std::move(cur);
    cur = std::move(next);
  }
  return seq;
}

Rational cauchyBound(const UniPoly& p) {
  requireNonZero(p, "cauchyBound");
  Rational maxRatio = 0;
  for (int i = 0; i < p.degree(); ++i) {
    const Rational r = abs(p[i] / p.lead());
    if (r > maxRatio) maxRatio = r;
  }
  return 1 + maxRatio;
}

UniPoly squarefreePart(const UniPoly& p) {
  requireNonZero(p, "squarefreePart");
  if (p.degree() < 1) return UniPoly::constant(1);
  return exactDiv(p, gcd(p, p.derivative())).monic();
}

std::vector<UniPoly> squarefreeFactors(const UniPoly& p) {
  requireNonZero(p, "squarefreeFactors");
  std::vector<UniPoly> factors;
  if (p.degree() < 1) return factors;
  const UniPoly f = p.monic();
  const UniPoly a0 = gcd(f, f.derivative());
  UniPoly b = exactDiv(f, a0);
  UniPoly c = exactDiv(f.derivative(), a0);
  UniPoly d = c - b.derivative();
  while (b.degree() >= 1) {
    UniPoly a = gcd(b, d);
    b = exactDiv(b, a);
    c = exactDiv(d, a);
    d = c - b.derivative();
    factors.push_back(std::move(a));
  }
  while (!factors.empty() && factors.back().degree() < 1) factors.pop_back();
  return factors;
}

int countRoots(const UniPoly& p, const Interval& interval) {
  requireNonZero(p, "countRoots");
  const Prepared prep = prepare(p, interval);
  if (prep.empty) return 0;
  const SturmSequence seq = sturmSequence(prep.poly);
  return seq.variations(prep.lo) - seq.variations(prep.hi);
}

bool isNonVanishing(const UniPoly& p, const Interval& interval) {
  return !p.isZero() && countRoots(p, interval) == 0;
}

std::vector<IsolatingInterval> isolateRoots(const UniPoly& p, const Interval& interval) {
  requireNonZero(p, "isolateRoots");
  const Prepared prep = prepare(p, interval);
  std::vector<IsolatingInterval> out;
  if (prep.empty) return out;
  const SturmSequence seq = sturmSequence(prep.poly);

  struct Cell {
    Rational lo, hi;
    int vlo, vhi;
  };
  std::vector<Cell> stack{{prep.lo, prep.hi, seq.variations(prep.lo), seq.variations(prep.hi)}};
  while (!stack.empty()) {
    Cell cell = std::move(stack.back());
    stack.pop_back();
    const int count = cell.vlo - cell.vhi;
    if (count <= 0) continue;
    if (count == 1) {
      out.push_back({cell.lo, cell.hi, 1});
      continue;
    }
    Rational mid;
    for (int i = 0;; ++i) {
      mid = cell.lo + (cell.hi - cell.lo) * splitFraction(i);
      if (prep.poly(mid) != 0) break;
    }
    const int vmid = seq.variations(mid);
    stack.push_back({cell.lo, mid, cell.vlo, vmid});
    stack.push_back({mid, cell.hi, vmid, cell.vhi});
  }
  std::sort(out.begin(), out.end(),
            [](const IsolatingInterval& a, const IsolatingInterval& b) { return a.lower < b.lower; });

  const auto factors = squarefreeFactors(p);
  for (auto& iv : out) {
    const Interval cell{iv.lower, iv.upper};
    for (std::size_t i = 0; i < factors.size(); ++i) {
      if (countRoots(factors[i], cell) > 0) {
        iv.multiplicity = static_cast<int>(i) + 1;
        break;
      }
    }
  }
  return out;
}

IsolatingInterval refine(const UniPoly& p, IsolatingInterval root, const Rational& maxWidth) {
  requireNonZero(p, "refine");
  if (maxWidth <= 0) throw Error(ErrorCode::InvalidArgument, "refine: width must be positive");
  const UniPoly sf = squarefreePart(p);
  if (sign(sf(root.lower)) * sign(sf(root.upper)) >= 0) {
    throw Error(ErrorCode::InvalidArgument, "refine: interval does not bracket a simple sign change");
  }
  while (root.width() > maxWidth) {
    const BisectOutcome step = bisectOnce(sf, root);
    if (step.exactRoot) {
      const Rational quarter = root.width() / 4;
      root.lower = *step.exactRoot - quarter;
      root.upper = *step.exactRoot + quarter;
    } else {
      root = *step.interval;
    }
  }
  return root;
}

bool hasSimpleZero(const UniPoly& p, const Interval& interval) {
  requireNonZero(p, "hasSimpleZero");
  const auto factors = squarefreeFactors(p);
  return !factors.empty() && factors.front().degree() >= 1 && countRoots(factors.front(), interval) > 0;
}

std::vector<Rational> rationalRoots(const UniPoly& p, const Interval& interval) {
  requireNonZero(p, "rationalRoots");
  std::vector<Rational> out;
  const UniPoly sf = squarefreePart(p);
  if (sf.degree() < 1) return out;
  // A rational root s/t in lowest terms has t | lead of the primitive
  // integer form, so candidates lie on the lattice (1/lead) Z.
  const Integer lead = abs(sf.primitiveIntegerCoeffs().back());
  const Rational spacing(Integer(1), lead);
  for (const auto& iv : isolateRoots(sf, interval)) {
    const IsolatingInterval narrow = refine(sf, iv, spacing / 2);
    const Rational candidate(ceilOf(narrow.lower * lead), lead);
    Rational c = candidate;
    c.canonicalize();
    if (narrow.lower < c && c < narrow.upper && sf(c) == 0) out.push_back(c);
  }
  return out;
}

std::vector<RootSignVerdict> signAtRoots(const UniPoly& target, const UniPoly& rootsOf,
                                         const Interval& interval) {
  requireNonZero(rootsOf, "signAtRoots");
  std::vector<RootSignVerdict> out;
  const UniPoly sf = squarefreePart(rootsOf);
  const UniPoly shared = target.isZero() ? sf : gcd(target, sf);
  for (const auto& iv : isolateRoots(rootsOf, interval)) {
    if (shared.degree() >= 1 && countRoots(shared, Interval{iv.lower, iv.upper}) > 0) {
      out.push_back({iv, RootSign::Zero});
      continue;
    }
    IsolatingInterval cur = iv;
    std::optional<Rational> exact;
    int rounds = 0;
    while (countRoots(target, Interval{cur.lower, cur.upper}) > 0) {
      if (++rounds > 64) {
        throw Error(ErrorCode::RefinementExhausted, "signAtRoots: 64 refinement rounds exhausted");
      }
      const BisectOutcome step = bisectOnce(sf, cur);
      if (step.exactRoot) {
        exact = step.exactRoot;
        break;
      }
      cur = *step.interval;
    }
    const Rational at = exact ? *exact : Rational((cur.lower + cur.upper) / 2);
    const int s = sign(target(at));
    out.push_back({iv, s < 0 ? RootSign::Negative : (s > 0 ? RootSign::Positive : RootSign::Zero)});
  }
  return out;
}

bool isNonPositiveOn(const UniPoly& p, const Interval& interval) {
  if (p.isZero()) return true;
  for (const auto& iv : isolateRoots(p, interval)) {
    if (iv.multiplicity % 2 == 1) return false;
  }
  for (int i = 0;; ++i) {
    const int s = sign(p(samplePointInside(interval, i)));
    if (s != 0) return s < 0;
  }
}

Rational pointInside(const Interval& interval) {
  if (interval.contains(0)) return 0;
  if (interval.lower && interval.upper) return (*interval.lower + *interval.upper) / 2;
  if (interval.lower) return *interval.lower + 1;
  return *interval.upper - 1;
}

Rational samplePointInside(const Interval& interval, int index) {
  if (index <= 0) return pointInside(interval);
  const Rational t = splitFraction(index - 1);
  if (interval.lower && interval.upper) return *interval.lower + (*interval.upper - *interval.lower) * t;
  if (interval.lower) return *interval.lower + t / (1 - t);
  if (interval.upper) return *interval.upper - t / (1 - t);
  return (2 * t - 1) / (t * (1 - t));
}

}  // namespace ytri
