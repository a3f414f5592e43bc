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

#include "cli.hpp"

#include <filesystem>
#include <fstream>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "chainacp/acp.hpp"
#include "chainacp/descriptor.hpp"
#include "chainacp/errors.hpp"
#include "chainacp/oracle.hpp"
#include "chainacp/trace_duality.hpp"
#include "json.hpp"

namespace chainacp::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

struct Options {
  int p = 3;
  int e = 2;
  int m = 1;
  int n = 0;
  bool json = false;
  std::uint64_t budget = kDefaultBudget;
  bool include_r = false;
  bool oracle = false;
  std::uint64_t seed = 0;
};

// Raised when a fast path and the oracle disagree.
struct Disagreement : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\n");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\n");
  return s.substr(b, e - b + 1);
}

int require_n(const Options& o) {
  if (o.n <= 0) throw ParseError("length -n is required and must be positive");
  return o.n;
}

FactorBasisPtr basis_for(const Options& o) {
  return FactorBasis::build(ExtensionContext::build(o.p, o.e, o.m), require_n(o));
}

// A descriptor is JSON text, a path to a JSON file, or "f;g" / "f;r;g" polynomials
// read in the context given by the flags.
AdditiveCyclicCode load_code(const std::string& desc, const Options& o) {
  std::string text = trim(desc);
  if (!text.empty() && text.front() != '{' && std::filesystem::is_regular_file(text)) {
    std::ifstream in(text);
    std::stringstream ss;
    ss << in.rdbuf();
    text = trim(ss.str());
  }
  if (!text.empty() && text.front() == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& ex) {
      throw ParseError(std::string("bad code descriptor: ") + ex.what());
    }
    if (!j.is_object()) throw ParseError("code descriptor must be a JSON object");
    if (!j.contains("p")) j["p"] = o.p;
    if (!j.contains("e")) j["e"] = o.e;
    if (!j.contains("m")) j["m"] = o.m;
    if (!j.contains("n")) j["n"] = require_n(o);
    return code_from_json(j.dump());
  }
  std::vector<std::string> parts;
  std::stringstream ss(text);
  for (std::string part; std::getline(ss, part, ';');) parts.push_back(trim(part));
  if (parts.size() != 2 && parts.size() != 3) throw ParseError("descriptor must be JSON, a file, or 'f;g' / 'f;r;g'");
  const FactorBasisPtr basis = basis_for(o);
  const GaloisRing& ring = basis->ring();
  const Divisor f = basis->require_divisor(parse_poly(ring, parts.front()));
  const Divisor g = basis->require_divisor(parse_poly(ring, parts.back()));
  const Poly r = parts.size() == 3 ? parse_poly(ring, parts[1]) : Poly{};
  return AdditiveCyclicCode::make(basis, f, r, g);
}

ordered_json poly_json(const GaloisRing& ring, const Poly& a) { return ordered_json::parse(poly::format_list(ring, a)); }

void cmd_factor(const Options& o, std::ostream& out) {
  const FactorBasisPtr basis = basis_for(o);
  const FactorBasis& b = *basis;
  const auto residue = b.residue_factors();
  const GaloisRing& ring = b.ring();
  const GaloisRing& rring = b.residue_basis()->ring();
  ordered_json j;
  j["p"] = o.p;
  j["e"] = o.e;
  j["m"] = o.m;
  j["n"] = b.n();
  ordered_json list = ordered_json::array();
  for (std::size_t k = 0; k < b.count(); ++k) {
    ordered_json f;
    f["factor"] = poly_json(ring, b.factors()[k]);
    f["text"] = poly::format(ring, b.factors()[k]);
    f["coset"] = b.cosets()[k];
    f["residue"] = poly_json(rring, residue[k]);
    f["residue_text"] = poly::format(rring, residue[k]);
    list.push_back(f);
  }
  j["factors"] = list;
  if (o.json) {
    out << j.dump() << '\n';
    return;
  }
  for (const auto& f : j["factors"]) {
    std::string coset;
    for (const auto& c : f["coset"]) coset += (coset.empty() ? "" : ",") + std::to_string(c.get<int>());
    out << f["text"].get<std::string>() << "\tcoset {" << coset << "}\tresidue " << f["residue_text"].get<std::string>()
        << '\n';
  }
}

void oracle_check_code(const AdditiveCyclicCode& c, const Options& o) {
  const auto brute = oracle::brute_code(c, o.budget);
  const auto fast = oracle::WordSet(c.basis()->context(), c.n(), c.enumerate(o.budget));
  if (!(brute == fast)) throw Disagreement("enumeration differs from the brute-force span");
}

void cmd_code(const std::string& desc, bool random, const Options& o, std::ostream& out) {
  std::optional<AdditiveCyclicCode> code;
  if (random) {
    const auto all = canonical_codes(basis_for(o), true, o.budget);
    std::mt19937_64 rng(o.seed);
    code = all[std::uniform_int_distribution<std::size_t>(0, all.size() - 1)(rng)];
  } else {
    code = load_code(desc, o);
  }
  if (o.oracle) oracle_check_code(*code, o);
  if (o.json) {
    out << code_info_json(*code) << '\n';
    return;
  }
  out << code->describe() << '\n';
  out << "rank " << code->rank() << '\n';
  out << "log_p |C| " << code->log_cardinality() << '\n';
  for (const auto& w : code->generator_words()) out << "  " << word::format(code->ctx(), w) << '\n';
}

void cmd_dual(const std::string& desc, const Options& o, std::ostream& out) {
  const AdditiveCyclicCode c = load_code(desc, o);
  const RawModule dual = trace_dual(c.raw());
  if (o.oracle) {
    const auto brute = oracle::brute_dual(oracle::brute_code(c, o.budget), o.budget);
    if (!(brute == oracle::brute_module(dual, o.budget))) throw Disagreement("trace dual differs from the brute-force dual");
  }
  std::optional<AdditiveCyclicCode> canon;
  try {
    canon = AdditiveCyclicCode::from_module(dual);
  } catch (const NoCanonicalTriple&) {
  }
  if (canon) {
    if (o.json) {
      out << code_to_json(*canon) << '\n';
    } else {
      out << canon->describe() << '\n';
      out << "rank " << canon->rank() << '\n';
    }
    return;
  }
  // Free but outside the (f, r, g) family: print the module.
  ordered_json j;
  j["canonical"] = false;
  ordered_json rows = ordered_json::array();
  for (const auto& w : dual.rows()) rows.push_back(word::format(c.ctx(), w));
  j["howell_rows"] = rows;
  if (o.json) {
    out << j.dump() << '\n';
  } else {
    out << "no canonical triple; Howell rows:\n";
    for (const auto& r : j["howell_rows"]) out << "  " << r.get<std::string>() << '\n';
  }
}

void cmd_acp(const std::string& a, const std::string& b, const Options& o, std::ostream& out) {
  const AdditiveCyclicCode c = load_code(a, o);
  const AdditiveCyclicCode d = load_code(b, o);
  const AcpVerdict v = acp_verdict(c, d);
  if (o.oracle) {
    const bool brute = oracle::brute_acp(oracle::brute_code(c, o.budget), oracle::brute_code(d, o.budget), o.budget);
    if (brute != v.definitional) throw Disagreement("definitional verdict differs from the brute-force decision");
  }
  if (o.json) {
    out << acp_verdict_json(v) << '\n';
    return;
  }
  out << "definitional " << v.definitional << '\n'
      << "polynomial   " << v.polynomial << '\n'
      << "matrix       " << v.matrix << '\n'
      << "projection   " << v.projection << '\n'
      << "agree        " << v.agree() << '\n';
  if (!v.matrix_diagnostic.empty()) out << "note: " << v.matrix_diagnostic << '\n';
}

void cmd_enum_acp(const Options& o, std::ostream& out) {
  const auto pairs = construct_acp_pairs(basis_for(o), o.include_r, o.budget);
  for (const auto& pr : pairs) {
    if (o.json) {
      ordered_json j;
      j["C"] = ordered_json::parse(code_to_json(pr.c));
      j["D"] = ordered_json::parse(code_to_json(pr.d));
      j["verdict"] = ordered_json::parse(acp_verdict_json(pr.verdict));
      out << j.dump() << '\n';
    } else {
      out << pr.c.describe() << "  |  " << pr.d.describe() << "  acp=" << pr.verdict.definitional
          << " agree=" << pr.verdict.agree() << '\n';
    }
  }
}

void cmd_audit(const Options& o, std::ostream& out, std::ostream& err) {
  const AuditSummary s = audit_theorems(basis_for(o), o.include_r, o.budget);
  if (o.oracle) {
    for (const auto& r : s.records) {
      const bool brute = oracle::brute_acp(oracle::brute_code(r.c, o.budget), oracle::brute_code(r.d, o.budget), o.budget);
      if (!brute) throw Disagreement("audited pair is not complementary by brute force: " + r.c.describe() + " | " + r.d.describe());
    }
  }
  std::size_t counterexamples = 0;
  for (const auto& r : s.records) {
    out << audit_record_json(r) << '\n';
    if (r.counterexample) ++counterexamples;
  }
  for (const auto& r : s.anomalies) out << audit_record_json(r) << '\n';
  if (!o.json)
    err << "codes " << s.codes << ", ordered pairs " << s.pairs_scanned << ", complementary " << s.records.size()
        << ", counterexamples " << counterexamples << ", non-complementary anomalies " << s.anomalies.size() << '\n';
}

void cmd_mindist(const std::string& desc, const Options& o, std::ostream& out) {
  const AdditiveCyclicCode c = load_code(desc, o);
  const std::size_t d = min_distance(c, o.budget);
  if (o.oracle) {
    std::size_t best = static_cast<std::size_t>(c.n()) + 1;
    const oracle::WordSet all = oracle::brute_code(c, o.budget);
    for (const auto& w : all.words()) {
      const std::size_t wt = word::weight(c.ctx(), w);
      if (wt > 0 && wt < best) best = wt;
    }
    if (best != d) throw Disagreement("minimum distance differs from the brute-force value");
  }
  if (o.json) {
    out << ordered_json{{"min_distance", d}}.dump() << '\n';
  } else {
    out << d << '\n';
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Additive cyclic codes over Galois ring extensions"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("-p", o.p, "residue characteristic (odd prime)")->capture_default_str();
  app.add_option("-e", o.e, "nilpotency index of the maximal ideal")->capture_default_str();
  app.add_option("-m", o.m, "residue degree of R")->capture_default_str();
  app.add_option("-n", o.n, "code length, coprime to p");
  app.add_flag("--json", o.json, "machine-readable output");
  app.add_option("--budget", o.budget, "enumeration budget")->capture_default_str();
  app.add_flag("--include-r", o.include_r, "sweep nonzero r as well");
  app.add_flag("--oracle", o.oracle, "cross-check against brute force (exit 4 on disagreement)");
  app.add_option("--seed", o.seed, "seed for randomized choices")->capture_default_str();

  std::string code_a;
  std::string code_b;
  bool random = false;
  auto* factor = app.add_subcommand("factor", "factor x^n - 1 into basic irreducibles");
  auto* code = app.add_subcommand("code", "describe a code");
  code->add_option("descriptor", code_a, "JSON, file, or 'f;r;g'");
  code->add_flag("--random", random, "pick a canonical code at random (uses --seed)");
  auto* dual = app.add_subcommand("dual", "trace dual of a code");
  dual->add_option("descriptor", code_a)->required();
  auto* acp = app.add_subcommand("acp", "decide whether two codes form an ACP");
  acp->add_option("C", code_a)->required();
  acp->add_option("D", code_b)->required();
  auto* enum_acp = app.add_subcommand("enum-acp", "list pairs with complementary divisors");
  auto* audit = app.add_subcommand("audit", "audit ACP claims over all canonical pairs (JSON Lines)");
  auto* mindist = app.add_subcommand("mindist", "minimum distance of a code");
  mindist->add_option("descriptor", code_a)->required();

  std::vector<std::string> argv_store{"chainacp"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_store) argv.push_back(s.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kExitOk;
    }
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  }

  try {
    if (factor->parsed()) {
      cmd_factor(o, out);
    } else if (code->parsed()) {
      if (!random && code_a.empty()) throw ParseError("code needs a descriptor or --random");
      cmd_code(code_a, random, o, out);
    } else if (dual->parsed()) {
      cmd_dual(code_a, o, out);
    } else if (acp->parsed()) {
      cmd_acp(code_a, code_b, o, out);
    } else if (enum_acp->parsed()) {
      cmd_enum_acp(o, out);
    } else if (audit->parsed()) {
      cmd_audit(o, out, err);
    } else if (mindist->parsed()) {
      cmd_mindist(code_a, o, out);
    }
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kExitBudget;
  } catch (const Disagreement& e) {
    err << "disagreement: " << e.what() << '\n';
    return kExitDisagreement;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  }
  return kExitOk;
}

}  // namespace chainacp::cli
