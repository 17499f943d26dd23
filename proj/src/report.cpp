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
#include "ytri/report.hpp"

#include <chrono>
#include <sstream>

#include "ytri/decompose.hpp"
#include "ytri/error.hpp"
#include "ytri/inject.hpp"
#include "ytri/overloaded.hpp"
#include "ytri/parse.hpp"

namespace ytri {
namespace {

using Json = nlohmann::ordered_json;

std::string bracket(const Rational& lo, const Rational& hi) {
  return "[" + toString(lo) + ", " + toString(hi) + "]";
}

Json nonSingularityJson(const NonSingularity& ns) {
  return std::visit(Overloaded{
                        [](const NonSingular& n) {
                          return Json{{"status", "non-singular"}, {"certificate", n.certificate}};
                        },
                        [](const Singular& s) {
                          Json witness;
                          if (s.witness.isExactPoint()) {
                            witness = toString(Point{s.witness.xLower, s.witness.yLower});
                          } else {
                            witness = Json{{"x", bracket(s.witness.xLower, s.witness.xUpper)},
                                           {"y", bracket(s.witness.yLower, s.witness.yUpper)}};
                          }
                          return Json{{"status", "singular"}, {"witness", witness}, {"detail", s.detail}};
                        },
                        [](const UnknownSingularity& u) {
                          return Json{{"status", "unknown"}, {"reason", u.reason}};
                        },
                    },
                    ns);
}

Json factorJson(const AtomicMap& f) {
  return Json{{"kind", kindName(f)}, {"map", toString(toPlanarMap(f))}, {"certificate", f.certificate}};
}

Json chainJson(const DecompositionReport& r) {
  Json factors = Json::array();
  for (const auto& f : r.chain.factors) factors.push_back(factorJson(f));
  Json steps = Json::array();
  for (const auto& s : r.steps) steps.push_back(s);
  return Json{{"theorem", theoremName(r.theorem)},
              {"verified", r.verified},
              {"triangular_count", r.triangularCount},
              {"quasi_triangular_count", r.quasiTriangularCount},
              {"all_triangular", r.allTriangular},
              {"offset", toString(r.offset)},
              {"composition", "F = f1 o f2 o ... o fk, fk acts first"},
              {"factors", factors},
              {"steps", steps}};
}

Json diagnosisJson(const NotDecomposable& e) {
  Json out = Json::array();
  for (const auto& d : e.diagnosis()) {
    out.push_back(Json{{"theorem", theoremName(d.theorem)}, {"code", errorCodeName(d.code)}, {"reason", d.reason}});
  }
  return out;
}

CommandResult classifyCommand(const PlanarMap& map) {
  const Classification c = classify(map);
  Json result{{"type", "(" + std::to_string(c.type.m) + "," + std::to_string(c.type.n) + ")"},
              {"d_F", toString(c.dF)},
              {"delta_map", c.isDeltaMap}};
  if (c.delta) result["delta"] = toString(*c.delta);
  result["jacobian_map"] = c.isJacobianMap;
  result["non_singularity"] = nonSingularityJson(c.nonSingularity);
  try {
    const LeadingPairData lp = leadingPairData(map);
    result["leading_pair"] = Json{{"m", lp.m}, {"d1m", toString(lp.d1m)}, {"d1m_star", toString(lp.d1mStar)}};
  } catch (const Error&) {
    result["leading_pair"] = "none: both components are free of y";
  }
  return {result, kExitSuccess};
}

CommandResult decomposeCommand(const PlanarMap& map) {
  try {
    const DecompositionReport r = decomposeDispatch(map);
    return {Json{{"status", "decomposed"}, {"chain", chainJson(r)}},
            r.verified ? kExitSuccess : kExitInconclusive};
  } catch (const NotDecomposable& e) {
    return {Json{{"status", "not-decomposable"}, {"diagnosis", diagnosisJson(e)}}, kExitInconclusive};
  }
}

Json factorInverseJson(const FactorInverse& f) {
  return std::visit(Overloaded{
                        [](const AtomicMap& a) { return Json{{"kind", "explicit"}, {"map", toString(toPlanarMap(a))}}; },
                        [](const PlanarMap& m) { return Json{{"kind", "explicit"}, {"map", toString(m)}}; },
                        [](const MonotoneInverse& m) {
                          return Json{{"kind", "monotone"},
                                      {"alpha", toString(m.alpha)},
                                      {"w", toString(m.w)},
                                      {"beta", toString(m.beta)},
                                      {"swapped", m.swapped},
                                      {"domain", toString(m.domain)}};
                        },
                    },
                    f);
}

CommandResult invertCommand(const PlanarMap& map, const RunOptions& options) {
  DecompositionReport r;
  try {
    r = decomposeDispatch(map);
  } catch (const NotDecomposable& e) {
    return {Json{{"status", "not-decomposable"}, {"diagnosis", diagnosisJson(e)}}, kExitInconclusive};
  }
  const InverseObject inv = invertChain(r.chain);
  const InverseCheck check = verifyInverse(map, inv, options.toleranceBits);
  Json result{{"status", "inverted"}, {"theorem", theoremName(r.theorem)}};
  if (const auto* e = std::get_if<ExplicitInverse>(&inv.form)) {
    result["form"] = "explicit";
    result["inverse"] = toString(e->map);
  } else {
    result["form"] = "evaluable";
    Json factors = Json::array();
    for (const auto& f : std::get<EvaluableInverse>(inv.form).factors) factors.push_back(factorInverseJson(f));
    result["composition"] = "F^-1 = g1 o g2 o ... o gk, gk acts first";
    result["factors"] = factors;
  }
  result["inner_image"] = toString(inv.innerImage);
  Json verification{{"ok", check.ok}, {"exact", check.exact}};
  if (!check.exact) {
    verification["tolerance_bits"] = options.toleranceBits;
    verification["max_error_below_2^-bits"] = check.maxError <= powerOfTwoInverse(options.toleranceBits);
  }
  if (check.counterexample) verification["counterexample"] = toString(*check.counterexample);
  result["verification"] = verification;
  return {result, check.ok ? kExitSuccess : kExitInconclusive};
}

CommandResult injectivityCommand(const PlanarMap& map, const RunOptions& options) {
  CheckOptions check;
  check.assumeNonSingular = options.assumeNonSingular;
  check.budget = options.budget;
  check.seed = options.seed;
  const InjectivityVerdict v = checkInjectivity(map, check);
  Json result;
  int exit = kExitSuccess;
  std::visit(Overloaded{
                 [&](const InjectiveCertified& c) {
                   result["status"] = "injective-certified";
                   result["criterion"] = criterionName(c.criterion);
                 },
                 [&](const NotInjective& n) {
                   result["status"] = "not-injective";
                   result["witness"] = Json{{"a", toString(n.a)}, {"b", toString(n.b)},
                                            {"image", toString(evalMap(map, n.a))}};
                 },
                 [&](const Inconclusive& i) {
                   result["status"] = "inconclusive";
                   result["reasons"] = i.reasons;
                   exit = kExitInconclusive;
                 },
             },
             v.status);
  Json criteria = Json::array();
  for (const auto& c : v.criteria) {
    criteria.push_back(Json{{"tag", criterionName(c.tag)}, {"outcome", outcomeName(c.outcome)}, {"detail", c.detail}});
  }
  result["criteria"] = criteria;
  result["falsifier"] = Json{{"budget", options.budget}, {"seed", options.seed}};
  return {result, exit};
}

CommandResult evalCommand(const PlanarMap& map, const RunOptions& options) {
  if (!options.at) throw Error(ErrorCode::InvalidArgument, "eval needs --at u,v");
  return {Json{{"at", toString(*options.at)}, {"image", toString(evalMap(map, *options.at))}}, kExitSuccess};
}

CommandResult verifyChainCommand(const PlanarMap& map) {
  DecompositionReport r;
  try {
    r = decomposeDispatch(map);
  } catch (const NotDecomposable& e) {
    return {Json{{"status", "not-decomposable"}, {"diagnosis", diagnosisJson(e)}}, kExitInconclusive};
  }
  const PlanarMap recomposed = composeChain(r.chain);
  Json factors = Json::array();
  bool certificates = true;
  for (const auto& f : r.chain.factors) {
    const bool holds = certificateHolds(f);
    certificates = certificates && holds;
    factors.push_back(Json{{"kind", kindName(f)}, {"certificate_valid", holds}});
  }
  const bool equal = recomposed == map;
  const bool det = jacobianDet(recomposed) == jacobianDet(map);
  Json result{{"status", equal && certificates ? "verified" : "mismatch"},
              {"theorem", theoremName(r.theorem)},
              {"recomposed", toString(recomposed)},
              {"recomposition_equal", equal},
              {"jacobian_equal", det},
              {"factors", factors}};
  return {result, equal && certificates ? kExitSuccess : kExitInconclusive};
}

bool primitive(const Json& j) { return !j.is_object() && !j.is_array(); }

std::string scalar(const Json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

void renderText(const Json& j, int indent, std::ostringstream& out);

void renderItem(const Json& item, int indent, std::ostringstream& out) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (primitive(item)) {
    out << pad << "- " << scalar(item) << '\n';
    return;
  }
  if (item.empty()) {
    out << pad << "- " << (item.is_array() ? "[]" : "{}") << '\n';
    return;
  }
  std::ostringstream nested;
  renderText(item, indent + 2, nested);
  std::string text = nested.str();
  if (item.is_object()) {
    text.replace(0, static_cast<std::size_t>(indent) + 2, pad + "- ");
    out << text;
  } else {
    out << pad << "-\n" << text;
  }
}

void renderText(const Json& j, int indent, std::ostringstream& out) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (j.is_array()) {
    for (const auto& item : j) renderItem(item, indent, out);
    return;
  }
  for (const auto& [key, value] : j.items()) {
    out << pad << key << ':';
    if (primitive(value)) {
      out << ' ' << scalar(value) << '\n';
    } else if (value.empty()) {
      out << (value.is_array() ? " []" : " {}") << '\n';
    } else {
      out << '\n';
      renderText(value, indent + 2, out);
    }
  }
}

}  // namespace

CommandResult runCommand(std::string_view command, std::string_view source, const RunOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  Json report{{"command", std::string(command)}, {"tool_version", std::string(kToolVersion)}};
  CommandResult out;
  try {
    const PlanarMap map = parseMap(source);
    report["input"] = toString(map);
    CommandResult r;
    if (command == "classify") {
      r = classifyCommand(map);
    } else if (command == "decompose") {
      r = decomposeCommand(map);
    } else if (command == "invert") {
      r = invertCommand(map, options);
    } else if (command == "check-injectivity") {
      r = injectivityCommand(map, options);
    } else if (command == "eval") {
      r = evalCommand(map, options);
    } else if (command == "verify-chain") {
      r = verifyChainCommand(map);
    } else {
      throw Error(ErrorCode::InvalidArgument, "unknown command '" + std::string(command) + "'");
    }
    report["result"] = std::move(r.report);
    out.exitCode = r.exitCode;
  } catch (const Error& e) {
    if (!report.contains("input")) report["input"] = std::string(source);
    report["error"] = Json{{"code", errorCodeName(e.code())}, {"message", e.what()}};
    out.exitCode = e.code() == ErrorCode::InternalContradiction ? kExitInternal : kExitInputError;
  }
  if (options.timing) {
    const auto elapsed = std::chrono::steady_clock::now() - start;
    report["timing_ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count();
  }
  out.report = std::move(report);
  return out;
}

std::string renderReport(const nlohmann::ordered_json& report, ReportFormat format) {
  if (format == ReportFormat::Tree) return report.dump(2) + "\n";
  std::ostringstream out;
  renderText(report, 0, out);
  return out.str();
}

}  // namespace ytri
