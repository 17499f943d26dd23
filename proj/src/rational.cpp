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
#include "ytri/rational.hpp"

#include <cctype>

#include "ytri/error.hpp"

namespace ytri {

std::string toString(const Rational& q) { return q.get_str(); }

Rational parseRational(std::string_view text) {
  auto valid = !text.empty();
  auto slashes = 0;
  for (std::size_t i = 0; i < text.size() && valid; ++i) {
    const char c = text[i];
    if (c == '/') {
      valid = ++slashes == 1 && i > 0 && i + 1 < text.size();
    } else if (c == '-' || c == '+') {
      valid = i == 0 && text.size() > 1;
    } else {
      valid = std::isdigit(static_cast<unsigned char>(c)) != 0;
    }
  }
  if (!valid) throw Error(ErrorCode::ParseError, "malformed rational '" + std::string(text) + "'");
  std::string s(text);
  if (s.front() == '+') s.erase(0, 1);
  Rational q;
  if (q.set_str(s, 10) != 0 || q.get_den() == 0) {
    throw Error(ErrorCode::ParseError, "malformed rational '" + std::string(text) + "'");
  }
  q.canonicalize();
  return q;
}

Integer floorOf(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Integer ceilOf(const Rational& q) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Rational powerOfTwoInverse(unsigned bits) {
  Integer den;
  mpz_ui_pow_ui(den.get_mpz_t(), 2, bits);
  return Rational(Integer(1), den);
}

}  // namespace ytri
