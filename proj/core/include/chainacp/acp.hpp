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

#ifndef CHAINACP_ACP_HPP
#define CHAINACP_ACP_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "chainacp/additive_codes.hpp"

namespace chainacp {

/// Outcome of the four complementarity criteria. The definitional one is ground truth.
struct AcpVerdict {
  bool definitional = false;
  bool polynomial = false;
  bool matrix = false;
  bool projection = false;
  /// Why the matrix criterion was not evaluated (non-square trace product), else empty.
  std::string matrix_diagnostic;

  bool agree() const noexcept {
    return definitional == polynomial && definitional == matrix && definitional == projection;
  }
};

/// C cap D = 0 and rank C + rank D = 2n.
bool is_acp_definitional(const AdditiveCyclicCode& c, const AdditiveCyclicCode& d);
/// f1 f2 = g1 g2 = x^n - 1 on the factor lattice.
bool is_acp_polynomial(const AdditiveCyclicCode& c, const AdditiveCyclicCode& d);
/// Tr(H2 G1^T) or Tr(H1 G2^T) invertible over R, H_i generating the trace dual of code i.
/// A non-square product yields false and a diagnostic.
bool is_acp_matrix(const AdditiveCyclicCode& c, const AdditiveCyclicCode& d, std::string* diagnostic = nullptr);
/// The definitional criterion for the residue projections.
bool is_acp_projection(const AdditiveCyclicCode& c, const AdditiveCyclicCode& d);
AcpVerdict acp_verdict(const AdditiveCyclicCode& c, const AdditiveCyclicCode& d);

/// Tr(H G^T) for words H (rows) and G (rows): entry (i, j) is Tr(h_i * g_j).
ChainMat trace_product(const ExtensionContext& ctx, const std::vector<CyclicWord>& h, const std::vector<CyclicWord>& g);

struct AcpPair {
  AdditiveCyclicCode c;
  AdditiveCyclicCode d;
  AcpVerdict verdict;
};

/// Pairs (f1, r1, g1), (f2, r2, g2) with f1 f2 = g1 g2 = x^n - 1, ordered by (f1 mask,
/// g1 mask, r1, r2). r1 = r2 = 0 unless include_r. Throws BudgetExceeded when the pair
/// count exceeds budget.
std::vector<AcpPair> construct_acp_pairs(const FactorBasisPtr& basis, bool include_r, std::uint64_t budget);

/// min(d(C), d(trace_dual(D))), skipping a zero side. Throws NotAcp, ZeroCode, BudgetExceeded.
std::size_t security_parameter(const AdditiveCyclicCode& c, const AdditiveCyclicCode& d, std::uint64_t budget);

/// Four statements that are claimed equivalent for r = 0 pairs.
struct CorollaryCheck {
  bool acp = false;                ///< definitional
  bool component_lcp = false;      ///< {<f1>, <f2>} and {<g1>, <g2>} complementary in R^n
  bool component_sigma = false;    ///< <f1>^perp = sigma<f2>, <g1>^perp = sigma<g2> (Euclidean)
  bool trace_sigma = false;        ///< trace_dual(C) = sigma(D)
  bool equivalent() const noexcept {
    return acp == component_lcp && acp == component_sigma && acp == trace_sigma;
  }
};

CorollaryCheck corollary_check(const AdditiveCyclicCode& c, const AdditiveCyclicCode& d);

struct AuditRecord {
  int p = 0, e = 0, m = 0, n = 0;
  AdditiveCyclicCode c;
  AdditiveCyclicCode d;
  AcpVerdict verdict;
  bool norem_holds = false;       ///< r1 = r2 = 0
  bool sigma_dual_holds = false;  ///< trace_dual(C) = sigma(D)
  std::optional<CorollaryCheck> corollary;  ///< set for r = 0 pairs
  bool counterexample = false;
  /// Claims that failed on this pair, e.g. "norem", "sigma_dual", "polynomial".
  std::vector<std::string> failed_claims;
};

struct AuditSummary {
  std::uint64_t codes = 0;
  std::uint64_t pairs_scanned = 0;
  /// One record per ordered pair with definitional verdict true.
  std::vector<AuditRecord> records;
  /// Non-ACP ordered pairs on which another criterion, or a corollary item, claimed ACP.
  std::vector<AuditRecord> anomalies;
};

/// Scans every ordered pair of canonical codes (r-sweep when include_r). Throws
/// BudgetExceeded when the number of ordered pairs exceeds budget.
AuditSummary audit_theorems(const FactorBasisPtr& basis, bool include_r, std::uint64_t budget);

}  // namespace chainacp

#endif  // CHAINACP_ACP_HPP
