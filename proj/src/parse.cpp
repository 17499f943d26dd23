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
#include "ytri/parse.hpp"

#include <cctype>
#include <vector>

namespace ytri {
namespace {

constexpr int kMaxExponent = 1000;

enum class Tok { Number, Ident, Plus, Minus, Star, Caret, Slash, LParen, RParen, Semicolon, Comma, End };

struct Token {
  Tok kind;
  std::string text;
  int line;
  int column;
};

std::string describe(const Token& t) {
  if (t.kind == Tok::End) return "end of input";
  return "'" + t.text + "'";
}

std::vector<Token> lex(std::string_view src) {
  std::vector<Token> out;
  int line = 1;
  int column = 1;
  std::size_t i = 0;
  const auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (src[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
  };
  while (i < src.size()) {
    const char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    const int l = line;
    const int col = column;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      // p/q with no spaces is one rational literal.
      if (j + 1 < src.size() && src[j] == '/' && std::isdigit(static_cast<unsigned char>(src[j + 1]))) {
        ++j;
        while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      }
      out.push_back({Tok::Number, std::string(src.substr(i, j - i)), l, col});
      advance(j - i);
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_')) ++j;
      out.push_back({Tok::Ident, std::string(src.substr(i, j - i)), l, col});
      advance(j - i);
      continue;
    }
    Tok kind;
    switch (c) {
      case '+': kind = Tok::Plus; break;
      case '-': kind = Tok::Minus; break;
      case '*': kind = Tok::Star; break;
      case '^': kind = Tok::Caret; break;
      case '/': kind = Tok::Slash; break;
      case '(': kind = Tok::LParen; break;
      case ')': kind = Tok::RParen; break;
      case ';': kind = Tok::Semicolon; break;
      case ',': kind = Tok::Comma; break;
      default: throw ParseError(l, col, std::string("unexpected character '") + c + "'");
    }
    out.push_back({kind, std::string(1, c), l, col});
    advance(1);
  }
  out.push_back({Tok::End, "", line, column});
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view src) : tokens_(lex(src)) {}

  PlanarMap map() {
    BiPoly p = expression(0);
    expect(Tok::Semicolon, "';' between the two components");
    BiPoly q = expression(0);
    Interval strip = Interval::real();
    if (peek().kind == Tok::Ident && peek().text == "on") {
      next();
      strip = interval();
    }
    finish();
    return {std::move(p), std::move(q), std::move(strip)};
  }

  BiPoly polynomial() {
    BiPoly p = expression(0);
    finish();
    return p;
  }

  Interval stripOnly() {
    Interval strip = interval();
    finish();
    return strip;
  }

  Point point() {
    const Rational u = signedNumber();
    expect(Tok::Comma, "',' between the coordinates");
    const Rational v = signedNumber();
    finish();
    return {u, v};
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& next() { return tokens_[pos_ < tokens_.size() - 1 ? pos_++ : pos_]; }

  [[noreturn]] static void fail(const Token& at, const std::string& message) {
    throw ParseError(at.line, at.column, message);
  }

  const Token& expect(Tok kind, const char* what) {
    if (peek().kind != kind) fail(peek(), std::string("expected ") + what + ", found " + describe(peek()));
    return next();
  }

  void finish() {
    if (peek().kind != Tok::End) fail(peek(), "unexpected " + describe(peek()));
  }

  static Rational literal(const Token& t) {
    try {
      return parseRational(t.text);
    } catch (const Error& e) {
      fail(t, e.what());
    }
  }

  BiPoly prefix() {
    const Token& t = next();
    switch (t.kind) {
      case Tok::Number: {
        const Rational v = literal(t);
        return BiPoly::constant(v);
      }
      case Tok::Ident:
        if (t.text == "x") return BiPoly::x();
        if (t.text == "y") return BiPoly::y();
        fail(t, "unknown variable '" + t.text + "'; only x and y are allowed");
      case Tok::Minus: return -expression(kUnary);
      case Tok::Plus: return expression(kUnary);
      case Tok::LParen: {
        BiPoly inner = expression(0);
        expect(Tok::RParen, "')'");
        return inner;
      }
      default: fail(t, "expected a number, variable or '(', found " + describe(t));
    }
  }

  static constexpr int kSum = 10;
  static constexpr int kProduct = 20;
  static constexpr int kUnary = 30;
  static constexpr int kPower = 40;

  BiPoly expression(int minBinding) {
    BiPoly lhs = prefix();
    for (;;) {
      const Token& t = peek();
      switch (t.kind) {
        case Tok::Number:
        case Tok::Ident:
        case Tok::LParen:
          if (t.kind == Tok::Ident && t.text == "on") return lhs;
          fail(t, "implicit multiplication is not allowed; write '*'");
        case Tok::Slash: fail(t, "division is only allowed inside a rational literal such as 5/2");
        case Tok::Caret: {
          if (kPower < minBinding) return lhs;
          const Token caret = next();
          const Token& e = peek();
          if (e.kind != Tok::Number || e.text.find('/') != std::string::npos) {
            fail(caret, "exponent after '^' must be a nonnegative integer literal");
          }
          next();
          const Integer n(e.text);
          if (n > kMaxExponent) fail(caret, "exponent exceeds " + std::to_string(kMaxExponent));
          lhs = lhs.pow(static_cast<unsigned>(n.get_ui()));
          if (peek().kind == Tok::Caret) fail(peek(), "chained '^' is ambiguous; use parentheses");
          break;
        }
        case Tok::Star:
          if (kProduct < minBinding) return lhs;
          next();
          lhs = lhs * expression(kProduct + 1);
          break;
        case Tok::Plus:
        case Tok::Minus: {
          if (kSum < minBinding) return lhs;
          const bool minus = next().kind == Tok::Minus;
          BiPoly rhs = expression(kSum + 1);
          lhs = minus ? lhs - rhs : lhs + rhs;
          break;
        }
        default: return lhs;
      }
    }
  }

  Rational signedNumber() {
    bool negative = false;
    if (peek().kind == Tok::Minus || peek().kind == Tok::Plus) negative = next().kind == Tok::Minus;
    const Token& t = expect(Tok::Number, "a rational number");
    const Rational v = literal(t);
    return negative ? Rational(-v) : v;
  }

  std::optional<Rational> endpoint(bool lower) {
    bool negative = false;
    const Token& start = peek();
    if (peek().kind == Tok::Minus || peek().kind == Tok::Plus) negative = next().kind == Tok::Minus;
    if (peek().kind == Tok::Ident && peek().text == "inf") {
      const Token& t = next();
      if (negative != lower) fail(t, lower ? "lower endpoint cannot be +inf" : "upper endpoint cannot be -inf");
      return std::nullopt;
    }
    if (peek().kind != Tok::Number) fail(start, "expected a rational endpoint or inf, found " + describe(peek()));
    const Rational v = literal(next());
    return negative ? Rational(-v) : v;
  }

  Interval interval() {
    const Token open = expect(Tok::LParen, "'(' opening the strip");
    auto lo = endpoint(true);
    expect(Tok::Comma, "',' between the endpoints");
    auto hi = endpoint(false);
    expect(Tok::RParen, "')' closing the strip");
    if (lo && hi && !(*lo < *hi)) fail(open, "empty strip: lower endpoint must be below upper");
    return Interval{std::move(lo), std::move(hi)};
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

std::string positioned(int line, int column, const std::string& message) {
  return "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message;
}

}  // namespace

ParseError::ParseError(int line, int column, const std::string& message)
    : Error(ErrorCode::ParseError, positioned(line, column, message)), line_(line), column_(column) {}

PlanarMap parseMap(std::string_view text) { return Parser(text).map(); }

PlanarMap parseMap(const MapSource& source) {
  return {parsePolynomial(source.pText), parsePolynomial(source.qText),
          source.strip ? parseStrip(*source.strip) : Interval::real()};
}

BiPoly parsePolynomial(std::string_view text) { return Parser(text).polynomial(); }

Interval parseStrip(std::string_view text) { return Parser(text).stripOnly(); }

Point parsePoint(std::string_view text) { return Parser(text).point(); }

}  // namespace ytri
