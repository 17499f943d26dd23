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
#include <string_view>

#include "ytri/error.hpp"
#include "ytri/mapalg.hpp"

namespace ytri {

/// Error(ParseError) carrying a 1-based source position.
class ParseError : public Error {
 public:
  ParseError(int line, int column, const std::string& message);
  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

/// Text pieces of a map: components and an optional "(a, b)" strip.
struct MapSource {
  std::string pText;
  std::string qText;
  std::optional<std::string> strip;
};

/// "P ; Q" or "P ; Q on (a, b)". Literals are integers or p/q, variables x
/// and y, operators + - * ^ and parentheses. Juxtaposition is rejected.
PlanarMap parseMap(std::string_view text);
PlanarMap parseMap(const MapSource& source);

BiPoly parsePolynomial(std::string_view text);

/// "(a, b)" with rational or inf endpoints.
Interval parseStrip(std::string_view text);

/// "u,v".
Point parsePoint(std::string_view text);

}  // namespace ytri
