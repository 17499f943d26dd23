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

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace ytri {

/// Exact rational number. GMP keeps every value in lowest terms with a
/// positive denominator after each arithmetic operation.
using Rational = mpq_class;
using Integer = mpz_class;

/// Lowest-terms text: "p/q", or "p" for integers.
std::string toString(const Rational& q);

/// Parses "p" or "p/q" (optional leading sign). Throws Error(ParseError).
Rational parseRational(std::string_view text);

inline int sign(const Rational& q) { return sgn(q); }

Integer floorOf(const Rational& q);
Integer ceilOf(const Rational& q);

/// 2^-bits as an exact rational.
Rational powerOfTwoInverse(unsigned bits);

}  // namespace ytri
