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
#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ytri/rational.hpp"

namespace ytri {

/// Degree reported for the zero polynomial; compares below every real degree.
inline constexpr int kZeroDegree = -1;

/// Univariate polynomial in x with rational coefficients, indexed by degree.
/// Trailing zero coefficients are stripped on construction, so the leading
/// coefficient of a nonzero polynomial is nonzero and equality is structural.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coeffs);
  UniPoly(std::initializer_list<Rational> coeffs);

  static UniPoly constant(const Rational& c);
  static UniPoly monomial(const Rational& c, int degree);
  static UniPoly x() { return monomial(1, 1); }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool isZero() const { return coeffs_.empty(); }
  bool isConstant() const { return coeffs_.size() <= 1; }

  /// Coefficient of x^i; zero outside the stored range.
  const Rational& operator[](int i) const;
  const Rational& lead() const;
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  Rational operator()(const Rational& at) const;
  UniPoly derivative() const;
  UniPoly pow(unsigned exponent) const;
  UniPoly monic() const;
  /// this(inner(x)).
  UniPoly compose(const UniPoly& inner) const;
  /// Rescales to the primitive integer polynomial with positive leading
  /// coefficient and the same roots.
  std::vector<Integer> primitiveIntegerCoeffs() const;

  UniPoly& operator+=(const UniPoly& other);
  UniPoly& operator-=(const UniPoly& other);
  UniPoly& operator*=(const UniPoly& other);
  UniPoly& operator*=(const Rational& c);

  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(UniPoly a, const Rational& c) { return a *= c; }
  friend UniPoly operator*(const Rational& c, UniPoly a) { return a *= c; }
  friend UniPoly operator-(UniPoly a);
  friend bool operator==(const UniPoly& a, const UniPoly& b) = default;

 private:
  void normalize();
  std::vector<Rational> coeffs_;
};

struct DivMod {
  UniPoly quotient;
  UniPoly remainder;
};

/// Euclidean division; throws Error(ZeroPolynomial) when divisor is zero.
DivMod divmod(const UniPoly& dividend, const UniPoly& divisor);
/// Monic gcd. Throws Error(UndefinedGcd) when both inputs are zero.
UniPoly gcd(const UniPoly& a, const UniPoly& b);
/// Exact quotient; throws Error(InvalidArgument) if the division leaves a
/// remainder.
UniPoly exactDiv(const UniPoly& dividend, const UniPoly& divisor);

enum class Var { X, Y };

/// Polynomial in y whose coefficients are univariate polynomials in x.
class BiPoly {
 public:
  BiPoly() = default;
  explicit BiPoly(std::vector<UniPoly> yCoeffs);
  BiPoly(const UniPoly& c);  // NOLINT(google-explicit-constructor): embeds y^0

  static BiPoly constant(const Rational& c) { return BiPoly(UniPoly::constant(c)); }
  static BiPoly x() { return BiPoly(UniPoly::x()); }
  static BiPoly y();
  /// c(x) * y^j.
  static BiPoly term(const UniPoly& c, int yDegree);

  int yDegree() const { return static_cast<int>(coeffs_.size()) - 1; }
  int xDegree() const;
  bool isZero() const { return coeffs_.empty(); }
  /// Coefficient of y^j; the zero polynomial outside the stored range.
  const UniPoly& coeff(int j) const;
  const std::vector<UniPoly>& coeffs() const { return coeffs_; }
  /// Leading y-coefficient; zero for the zero polynomial.
  const UniPoly& lead() const;
  /// Nonzero y-powers present.
  std::vector<int> ySupport() const;

  Rational operator()(const Rational& atX, const Rational& atY) const;
  /// Fixes x and returns the univariate polynomial in y (stored as UniPoly).
  UniPoly atX(const Rational& atX) const;

  BiPoly derivative(Var v) const;
  BiPoly pow(unsigned exponent) const;

  BiPoly& operator+=(const BiPoly& other);
  BiPoly& operator-=(const BiPoly& other);
  BiPoly& operator*=(const BiPoly& other);
  BiPoly& operator*=(const UniPoly& c);

  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator*(BiPoly a, const UniPoly& c) { return a *= c; }
  friend BiPoly operator*(const UniPoly& c, BiPoly a) { return a *= c; }
  friend BiPoly operator-(BiPoly a);
  friend bool operator==(const BiPoly& a, const BiPoly& b) = default;

 private:
  void normalize();
  std::vector<UniPoly> coeffs_;
};

/// f(u(x,y), v(x,y)), expanded.
BiPoly substitute(const BiPoly& f, const BiPoly& u, const BiPoly& v);

/// Open interval (lower, upper); a missing bound stands for -inf / +inf.
struct Interval {
  std::optional<Rational> lower;
  std::optional<Rational> upper;

  static Interval real() { return {}; }
  /// Throws Error(InvalidArgument) unless lower < upper.
  static Interval open(std::optional<Rational> lower, std::optional<Rational> upper);

  bool contains(const Rational& x) const;
  bool isBounded() const { return lower && upper; }
  /// Whether other lies inside this interval.
  bool encloses(const Interval& other) const;

  friend bool operator==(const Interval& a, const Interval& b) = default;
};

/// Canonical text, e.g. "x^2*y + y + 2*x". Reparses to the same value.
std::string toString(const UniPoly& p);
std::string toString(const BiPoly& p);
/// "(a, b)" with "-inf" / "inf".
std::string toString(const Interval& interval);

}  // namespace ytri
