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
#include "ytri/poly.hpp"

#include <algorithm>
#include <sstream>

#include "ytri/error.hpp"

namespace ytri {
namespace {

const Rational& zeroRational() {
  static const Rational zero(0);
  return zero;
}

const UniPoly& zeroUni() {
  static const UniPoly zero;
  return zero;
}

}  // namespace

// --- UniPoly ---------------------------------------------------------------

UniPoly::UniPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

UniPoly::UniPoly(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { normalize(); }

UniPoly UniPoly::constant(const Rational& c) { return UniPoly(std::vector<Rational>{c}); }

UniPoly UniPoly::monomial(const Rational& c, int degree) {
  if (degree < 0) throw Error(ErrorCode::InvalidArgument, "negative monomial degree");
  std::vector<Rational> coeffs(static_cast<std::size_t>(degree) + 1);
  coeffs.back() = c;
  return UniPoly(std::move(coeffs));
}

void UniPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const Rational& UniPoly::operator[](int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return zeroRational();
  return coeffs_[static_cast<std::size_t>(i)];
}

const Rational& UniPoly::lead() const {
  return coeffs_.empty() ? zeroRational() : coeffs_.back();
}

Rational UniPoly::operator()(const Rational& at) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= at;
    acc += *it;
  }
  return acc;
}

UniPoly UniPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> out(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) out[i - 1] = coeffs_[i] * static_cast<long>(i);
  return UniPoly(std::move(out));
}

UniPoly UniPoly::pow(unsigned exponent) const {
  UniPoly result = constant(1);
  UniPoly base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent > 0) base *= base;
  }
  return result;
}

UniPoly UniPoly::monic() const {
  if (isZero()) return {};
  return *this * Rational(1 / lead());
}

UniPoly UniPoly::compose(const UniPoly& inner) const {
  UniPoly acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= inner;
    acc += constant(*it);
  }
  return acc;
}

std::vector<Integer> UniPoly::primitiveIntegerCoeffs() const {
  Integer denLcm = 1;
  for (const auto& c : coeffs_) mpz_lcm(denLcm.get_mpz_t(), denLcm.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Integer> out;
  out.reserve(coeffs_.size());
  Integer content = 0;
  for (const auto& c : coeffs_) {
    Integer v = c.get_num() * (denLcm / c.get_den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
    out.push_back(std::move(v));
  }
  if (content == 0) return out;
  if (sgn(out.back()) < 0) content = -content;
  for (auto& v : out) v /= content;
  return out;
}

UniPoly& UniPoly::operator+=(const UniPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  normalize();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  normalize();
  return *this;
}

UniPoly& UniPoly::operator*=(const UniPoly& other) {
  *this = *this * other;
  return *this;
}

UniPoly& UniPoly::operator*=(const Rational& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& v : coeffs_) v *= c;
  return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.isZero() || b.isZero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return UniPoly(std::move(out));
}

UniPoly operator-(UniPoly a) {
  for (auto& v : a.coeffs_) v = -v;
  return a;
}

DivMod divmod(const UniPoly& dividend, const UniPoly& divisor) {
  if (divisor.isZero()) throw Error(ErrorCode::ZeroPolynomial, "division by the zero polynomial");
  const int dd = divisor.degree();
  std::vector<Rational> rem = dividend.coeffs();
  if (dividend.degree() < dd) return {UniPoly{}, dividend};
  std::vector<Rational> quot(static_cast<std::size_t>(dividend.degree() - dd) + 1);
  const Rational leadInv = 1 / divisor.lead();
  for (int k = dividend.degree() - dd; k >= 0; --k) {
    const Rational factor = rem[static_cast<std::size_t>(k + dd)] * leadInv;
    quot[static_cast<std::size_t>(k)] = factor;
    if (factor == 0) continue;
    for (int j = 0; j <= dd; ++j) rem[static_cast<std::size_t>(k + j)] -= factor * divisor[j];
  }
  rem.resize(static_cast<std::size_t>(dd));
  return {UniPoly(std::move(quot)), UniPoly(std::move(rem))};
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
  if (a.isZero() && b.isZero()) throw Error(ErrorCode::UndefinedGcd, "undefined gcd");
  UniPoly r0 = a;
  UniPoly r1 = b;
  while (!r1.isZero()) {
    UniPoly r2 = divmod(r0, r1).remainder;
    // Monic remainders keep rational coefficient growth in check.
    r0 = std::move(r1);
    r1 = r2.monic();
  }
  return r0.monic();
}

UniPoly exactDiv(const UniPoly& dividend, const UniPoly& divisor) {
  auto [q, r] = divmod(dividend, divisor);
  if (!r.isZero()) throw Error(ErrorCode::InvalidArgument, "inexact polynomial division");
  return q;
}

// --- BiPoly ----------------------------------------------------------------

BiPoly::BiPoly(std::vector<UniPoly> yCoeffs) : coeffs_(std::move(yCoeffs)) { normalize(); }

BiPoly::BiPoly(const UniPoly& c) {
  if (!c.isZero()) coeffs_.push_back(c);
}

BiPoly BiPoly::y() { return term(UniPoly::constant(1), 1); }

BiPoly BiPoly::term(const UniPoly& c, int yDegree) {
  if (yDegree < 0) throw Error(ErrorCode::InvalidArgument, "negative y-degree");
  std::vector<UniPoly> coeffs(static_cast<std::size_t>(yDegree) + 1);
  coeffs.back() = c;
  return BiPoly(std::move(coeffs));
}

void BiPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back().isZero()) coeffs_.pop_back();
}

int BiPoly::xDegree() const {
  int d = kZeroDegree;
  for (const auto& c : coeffs_) d = std::max(d, c.degree());
  return d;
}

const UniPoly& BiPoly::coeff(int j) const {
  if (j < 0 || j >= static_cast<int>(coeffs_.size())) return zeroUni();
  return coeffs_[static_cast<std::size_t>(j)];
}

const UniPoly& BiPoly::lead() const { return coeffs_.empty() ? zeroUni() : coeffs_.back(); }

std::vector<int> BiPoly::ySupport() const {
  std::vector<int> out;
  for (int j = 0; j <= yDegree(); ++j) {
    if (!coeff(j).isZero()) out.push_back(j);
  }
  return out;
}

Rational BiPoly::operator()(const Rational& atX, const Rational& atY) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= atY;
    acc += (*it)(atX);
  }
  return acc;
}

UniPoly BiPoly::atX(const Rational& atX) const {
  std::vector<Rational> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(c(atX));
  return UniPoly(std::move(out));
}

BiPoly BiPoly::derivative(Var v) const {
  if (v == Var::X) {
    std::vector<UniPoly> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) out.push_back(c.derivative());
    return BiPoly(std::move(out));
  }
  if (coeffs_.size() <= 1) return {};
  std::vector<UniPoly> out(coeffs_.size() - 1);
  for (std::size_t j = 1; j < coeffs_.size(); ++j) out[j - 1] = coeffs_[j] * Rational(static_cast<long>(j));
  return BiPoly(std::move(out));
}

BiPoly BiPoly::pow(unsigned exponent) const {
  BiPoly result = constant(1);
  BiPoly base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent > 0) base *= base;
  }
  return result;
}

BiPoly& BiPoly::operator+=(const BiPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t j = 0; j < other.coeffs_.size(); ++j) coeffs_[j] += other.coeffs_[j];
  normalize();
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t j = 0; j < other.coeffs_.size(); ++j) coeffs_[j] -= other.coeffs_[j];
  normalize();
  return *this;
}

BiPoly& BiPoly::operator*=(const BiPoly& other) {
  *this = *this * other;
  return *this;
}

BiPoly& BiPoly::operator*=(const UniPoly& c) {
  for (auto& v : coeffs_) v *= c;
  normalize();
  return *this;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  if (a.isZero() || b.isZero()) return {};
  std::vector<UniPoly> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].isZero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return BiPoly(std::move(out));
}

BiPoly operator-(BiPoly a) {
  for (auto& v : a.coeffs_) v = -v;
  return a;
}

BiPoly substitute(const BiPoly& f, const BiPoly& u, const BiPoly& v) {
  // Horner in y over coefficients that are themselves Horner-evaluated at u.
  BiPoly acc;
  for (int j = f.yDegree(); j >= 0; --j) {
    acc *= v;
    BiPoly cj;
    const auto& c = f.coeff(j).coeffs();
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
      cj *= u;
      cj += BiPoly::constant(*it);
    }
    acc += cj;
  }
  return acc;
}

// --- Interval --------------------------------------------------------------

Interval Interval::open(std::optional<Rational> lower, std::optional<Rational> upper) {
  if (lower && upper && !(*lower < *upper)) {
    throw Error(ErrorCode::InvalidArgument, "empty interval: lower bound must be below upper bound");
  }
  return Interval{std::move(lower), std::move(upper)};
}

bool Interval::contains(const Rational& x) const {
  return (!lower || *lower < x) && (!upper || x < *upper);
}

bool Interval::encloses(const Interval& other) const {
  const bool lowOk = !lower || (other.lower && *lower <= *other.lower);
  const bool highOk = !upper || (other.upper && *other.upper <= *upper);
  return lowOk && highOk;
}

// --- Printing --------------------------------------------------------------

namespace {

struct Monomial {
  Rational coeff;
  int xPow;
  int yPow;
};

std::string printMonomials(const std::vector<Monomial>& terms) {
  if (terms.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& t : terms) {
    const bool negative = t.coeff < 0;
    const Rational mag = negative ? Rational(-t.coeff) : t.coeff;
    if (first) {
      if (negative) out << '-';
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    std::vector<std::string> factors;
    const bool hasVars = t.xPow > 0 || t.yPow > 0;
    if (mag != 1 || !hasVars) factors.push_back(toString(mag));
    if (t.xPow == 1) factors.emplace_back("x");
    if (t.xPow > 1) factors.push_back("x^" + std::to_string(t.xPow));
    if (t.yPow == 1) factors.emplace_back("y");
    if (t.yPow > 1) factors.push_back("y^" + std::to_string(t.yPow));
    for (std::size_t i = 0; i < factors.size(); ++i) {
      if (i > 0) out << '*';
      out << factors[i];
    }
  }
  return out.str();
}

}  // namespace

std::string toString(const UniPoly& p) {
  std::vector<Monomial> terms;
  for (int i = p.degree(); i >= 0; --i) {
    if (p[i] != 0) terms.push_back({p[i], i, 0});
  }
  return printMonomials(terms);
}

std::string toString(const BiPoly& p) {
  std::vector<Monomial> terms;
  for (int j = p.yDegree(); j >= 0; --j) {
    const auto& c = p.coeff(j);
    for (int i = c.degree(); i >= 0; --i) {
      if (c[i] != 0) terms.push_back({c[i], i, j});
    }
  }
  return printMonomials(terms);
}

std::string toString(const Interval& interval) {
  return "(" + (interval.lower ? toString(*interval.lower) : std::string("-inf")) + ", " +
         (interval.upper ? toString(*interval.upper) : std::string("inf")) + ")";
}

}  // namespace ytri
