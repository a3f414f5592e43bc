/*
 * Copyright 2026 The chainacp Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "chainacp/descriptor.hpp"

#include <cctype>
#include <regex>
#include <string>
#include <vector>

#include "chainacp/errors.hpp"
#include "json.hpp"

namespace chainacp {

namespace {

using ordered_json = nlohmann::ordered_json;

GrElem element_from_json(const GaloisRing& ring, const nlohmann::json& j) {
  if (j.is_number_integer()) return ring.from_int(j.get<std::int64_t>());
  if (j.is_array()) {
    std::vector<std::int64_t> c;
    for (const auto& x : j) {
      if (!x.is_number_integer()) throw ParseError("ring element coefficients must be integers");
      c.push_back(x.get<std::int64_t>());
    }
    if (static_cast<int>(c.size()) > ring.degree())
      throw ParseError("ring element has more than m = " + std::to_string(ring.degree()) + " coefficients");
    return ring.from_coeffs(c);
  }
  throw ParseError("ring element must be an integer or a list of integers");
}

Poly poly_from_json(const GaloisRing& ring, const nlohmann::json& j) {
  if (j.is_string()) return parse_poly(ring, j.get<std::string>());
  if (!j.is_array()) throw ParseError("polynomial must be a coefficient list or a string");
  std::vector<GrElem> c;
  for (const auto& x : j) c.push_back(element_from_json(ring, x));
  return Poly(std::move(c));
}

ordered_json element_to_json(const GaloisRing& ring, const GrElem& x) {
  if (ring.degree() == 1) return x.c[0];
  ordered_json a = ordered_json::array();
  for (int k = 0; k < ring.degree(); ++k) a.push_back(x.c[static_cast<std::size_t>(k)]);
  return a;
}

ordered_json poly_to_json(const GaloisRing& ring, const Poly& p) {
  ordered_json a = ordered_json::array();
  for (const auto& c : p.coeffs()) a.push_back(element_to_json(ring, c));
  return a;
}

// Single factor in "x^2+4x+8" notation.
Poly parse_sum(const GaloisRing& ring, const std::string& text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty()) throw ParseError("empty polynomial");
  static const std::regex term(R"(([+-]?)(\d*)(\*?x(\^(\d+))?)?)");
  std::vector<std::int64_t> coeffs;
  std::size_t pos = 0;
  while (pos < s.size()) {
    std::smatch m;
    const std::string rest = s.substr(pos);
    if (!std::regex_search(rest, m, term, std::regex_constants::match_continuous) || m.length(0) == 0)
      throw ParseError("cannot parse polynomial near '" + rest + "'");
    if (pos > 0 && m[1].length() == 0) throw ParseError("missing sign between terms in '" + s + "'");
    if (m[2].length() == 0 && m[3].length() == 0) throw ParseError("dangling sign in '" + s + "'");
    std::int64_t c = m[2].length() ? std::stoll(m[2].str()) : 1;
    if (m[1].str() == "-") c = -c;
    std::size_t deg = 0;
    if (m[3].length()) deg = m[5].length() ? static_cast<std::size_t>(std::stoul(m[5].str())) : 1;
    if (deg > 4096) throw ParseError("degree too large");
    if (coeffs.size() <= deg) coeffs.resize(deg + 1, 0);
    coeffs[deg] += c;
    pos += static_cast<std::size_t>(m.length(0));
  }
  return Poly::from_ints(ring, coeffs);
}

}  // namespace

Poly parse_poly(const GaloisRing& ring, const std::string& text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (!s.empty() && s.front() == '[') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(s);
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(std::string("bad coefficient list: ") + e.what());
    }
    return poly_from_json(ring, j);
  }
  if (ring.degree() != 1) throw ParseError("text polynomials need m = 1; use a coefficient list");
  if (!s.empty() && s.front() == '(') {
    // Product of parenthesized factors.
    Poly acc = Poly::constant(ring.one());
    std::size_t pos = 0;
    while (pos < s.size()) {
      if (s[pos] != '(') throw ParseError("expected '(' in '" + s + "'");
      const std::size_t close = s.find(')', pos);
      if (close == std::string::npos) throw ParseError("unbalanced parentheses in '" + s + "'");
      acc = poly::mul(ring, acc, parse_sum(ring, s.substr(pos + 1, close - pos - 1)));
      pos = close + 1;
    }
    return acc;
  }
  return parse_sum(ring, s);
}

AdditiveCyclicCode code_from_json(const std::string& json, const FactorBasisPtr& basis) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad code descriptor: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("code descriptor must be a JSON object");
  const ExtensionContext& ctx = *basis->context();
  auto check = [&](const char* key, int expected) {
    if (j.contains(key) && (!j[key].is_number_integer() || j[key].get<int>() != expected))
      throw LevelMismatch(std::string("descriptor field '") + key + "' does not match the active context");
  };
  check("p", ctx.p());
  check("e", ctx.e());
  check("m", ctx.m());
  check("n", basis->n());
  const GaloisRing& ring = basis->ring();
  for (const char* key : {"f", "g"})
    if (!j.contains(key)) throw ParseError(std::string("descriptor lacks '") + key + "'");
  const Divisor f = basis->require_divisor(poly_from_json(ring, j["f"]));
  const Divisor g = basis->require_divisor(poly_from_json(ring, j["g"]));
  if (j.contains("r0")) {
    if (j.contains("r")) throw ParseError("descriptor has both 'r' and 'r0'");
    return AdditiveCyclicCode::make_twisted(basis, f, poly_from_json(ring, j["r0"]), g);
  }
  const Poly r = j.contains("r") ? poly_from_json(ring, j["r"]) : Poly{};
  return AdditiveCyclicCode::make(basis, f, r, g);
}

AdditiveCyclicCode code_from_json(const std::string& json) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad code descriptor: ") + e.what());
  }
  for (const char* key : {"p", "e", "m", "n"})
    if (!j.contains(key) || !j[key].is_number_integer()) throw ParseError(std::string("descriptor lacks integer '") + key + "'");
  auto ctx = ExtensionContext::build(j["p"].get<int>(), j["e"].get<int>(), j["m"].get<int>());
  return code_from_json(json, FactorBasis::build(ctx, j["n"].get<int>()));
}

namespace {

ordered_json code_object(const AdditiveCyclicCode& c) {
  const GaloisRing& ring = c.ring();
  ordered_json o;
  o["p"] = c.ctx().p();
  o["e"] = c.ctx().e();
  o["m"] = c.ctx().m();
  o["n"] = c.n();
  o["f"] = poly_to_json(ring, c.f().poly);
  if (auto r = c.r()) {
    o["r"] = poly_to_json(ring, *r);
  } else {
    o["r0"] = poly_to_json(ring, c.twist());
  }
  o["g"] = poly_to_json(ring, c.g().poly);
  return o;
}

ordered_json verdict_object(const AcpVerdict& v) {
  ordered_json o;
  o["definitional"] = v.definitional;
  o["polynomial"] = v.polynomial;
  o["matrix"] = v.matrix;
  o["projection"] = v.projection;
  o["agree"] = v.agree();
  if (!v.matrix_diagnostic.empty()) o["matrix_diagnostic"] = v.matrix_diagnostic;
  return o;
}

}  // namespace

std::string code_to_json(const AdditiveCyclicCode& c) { return code_object(c).dump(); }

std::string code_info_json(const AdditiveCyclicCode& c) {
  ordered_json o = code_object(c);
  o["rank"] = c.rank();
  o["log_p_cardinality"] = c.log_cardinality();
  o["f_divides_r0"] = c.f_divides_twist();
  ordered_json gens = ordered_json::array();
  for (const auto& w : c.generator_words()) {
    ordered_json a = ordered_json::array();
    a.push_back(poly_to_json(c.ring(), word::a_part(w)));
    a.push_back(poly_to_json(c.ring(), word::b_part(w)));
    gens.push_back(a);
  }
  o["generators"] = gens;
  return o.dump();
}

std::string dual_report_json(const DualReport& r) {
  ordered_json o;
  o["verdict"] = r.verdict;
  ordered_json failed = ordered_json::array();
  for (auto k : r.failed) failed.push_back(to_string(k));
  o["failed"] = failed;
  if (r.witness) {
    o["witness"] = ordered_json{{"i", r.witness->first}, {"j", r.witness->second}};
  } else {
    o["witness"] = nullptr;
  }
  o["notes"] = r.notes;
  return o.dump();
}

std::string acp_verdict_json(const AcpVerdict& v) { return verdict_object(v).dump(); }

std::string audit_record_json(const AuditRecord& r) {
  ordered_json o;
  o["p"] = r.p;
  o["e"] = r.e;
  o["m"] = r.m;
  o["n"] = r.n;
  o["C"] = code_object(r.c);
  o["D"] = code_object(r.d);
  o["verdict"] = verdict_object(r.verdict);
  o["norem_holds"] = r.norem_holds;
  o["sigma_dual_holds"] = r.sigma_dual_holds;
  if (r.corollary) {
    o["corollary"] = ordered_json{{"acp", r.corollary->acp},
                                  {"component_lcp", r.corollary->component_lcp},
                                  {"component_sigma", r.corollary->component_sigma},
                                  {"trace_sigma", r.corollary->trace_sigma},
                                  {"equivalent", r.corollary->equivalent()}};
  } else {
    o["corollary"] = nullptr;
  }
  o["counterexample"] = r.counterexample;
  o["failed_claims"] = r.failed_claims;
  return o.dump();
}

}  // namespace chainacp
