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
#include "ytri/error.hpp"

namespace ytri {

std::string_view errorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "invalid_argument";
    case ErrorCode::UndefinedGcd: return "undefined_gcd";
    case ErrorCode::ZeroPolynomial: return "zero_polynomial";
    case ErrorCode::OutsideStrip: return "outside_strip";
    case ErrorCode::NoLeadingPair: return "no_leading_pair";
    case ErrorCode::NoConstant: return "no_constant";
    case ErrorCode::ProportionalityFailed: return "proportionality_failed";
    case ErrorCode::ShapeMismatch: return "shape_mismatch";
    case ErrorCode::SingularInput: return "singular_input";
    case ErrorCode::HypothesisViolated: return "hypothesis_violated";
    case ErrorCode::NotDecomposable: return "not_decomposable";
    case ErrorCode::InvalidCertificate: return "invalid_certificate";
    case ErrorCode::RefinementExhausted: return "refinement_exhausted";
    case ErrorCode::OutsideImage: return "outside_image";
    case ErrorCode::ParseError: return "parse_error";
    case ErrorCode::InternalContradiction: return "internal_contradiction";
  }
  return "unknown";
}

}  // namespace ytri
