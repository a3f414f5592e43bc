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

#include "chainacp/acp.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>

#include "chainacp/errors.hpp"
#include "chainacp/trace_duality.hpp"

namespace chainacp {

namespace {

void require_same_space(const AdditiveCyclicCode& c, const AdditiveCyclicCode& d) {
  if (c.n() != d.n() || !(c.ctx() == d.ctx())) throw LevelMismatch("codes live in different ambient spaces");
}

bool definitional_raw(const AdditiveCyclicCode& c, const AdditiveCyclicCode& d) {
  if (c.rank() + d.rank() != 2 * c.n()) return false;
  return c.raw().intersect(d.raw()).is_zero();
}

std::vector<CyclicWord> words_of(const ChainMat& rows) {
  std::vector<CyclicWord> out;
  for (std::size_t i = 0; i < rows.rows(); ++i) out.push_back(word::unflatten(rows.row(i)));
  return out;
}

// Generator words of a free module; trace duals of free modules are free.
std::vector<CyclicWord> basis_words(const RawModule& m) {
  auto b = m.basis_rows();
  if (!b) throw std::logic_error("trace dual of a free code is not free");
  return words_of(*b);
}

// Both trace products, parity matrices taken as bases of the trace duals.
bool matrix_raw(const ExtensionContext& ctx, const AdditiveCyclicCode& c, const RawModule& cdual,
                const AdditiveCyclicCode& d, const RawModule& ddual, std::string* diagnostic) {
  const auto h2 = basis_words(ddual);
  if (static_cast<std::size_t>(c.rank()) != h2.size()) {
    if (diagnostic)
      *diagnostic = "Tr(H2 G1^T) is " + std::to_string(h2.size()) + "x" + std::to_string(c.rank()) +
                    ": rank C + rank D != 2n";
    return false;
  }
  if (diagnostic) diagnostic->clear();
  // An empty square matrix is invertible.
  auto invertible = [](const ChainMat& m) { return m.rows() == 0 || is_invertible(m); };
  if (invertible(trace_product(ctx, h2, c.generator_words()))) return true;
  return invertible(trace_product(ctx, basis_words(cdual), d.generator_words()));
}

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) return std::numeric_limits<std::uint64_t>::max();
  return a * b;
}

ChainMat ideal_rows(const GaloisRing& ring, int n, const Poly& a) {
  ChainMat m(ring, 0, static_cast<std::size_t>(n));
  for (int i = 0; i + a.degree() < n; ++i) {
    const Poly row = poly::mul(ring, Poly::monomial(ring, i, ring.one()), a);
    std::vector<GrElem> v(static_cast<std::size_t>(n));
    for (int k = 0; k <= row.degree(); ++k) v[static_cast<std::size_t>(k)] = row.coeff(k);
    m.append_row(v);
  }
  return howell_form(m);
}

ChainMat reverse_columns(const ChainMat& m) {
  ChainMat out(m.ring(), m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out.at(i, m.cols() - 1 - j) = m.at(i, j);
  return howell_form(out);
}

ChainMat euclidean_dual(const ChainMat& m) {
  if (m.rows() == 0) return ChainMat::identity(m.ring(), m.cols());
  return row_kernel(m.transpose());
}

bool lcp(const ChainMat& a, const ChainMat& b) {
  const bool meet_zero = a.rows() == 0 || b.rows() == 0 || module_intersect(a, b).rows() == 0;
  return meet_zero && module_sum(a, b) == ChainMat::identity(a.ring(), a.cols());
}

// Per-code data reused across the pair scan.
struct Entry {
  AdditiveCyclicCode code;
  RawModule dual;
  AdditiveCyclicCode proj;
  AdditiveCyclicCode sigma;
};

CorollaryCheck corollary_from(const Entry& c, const Entry& d, bool acp) {
  const GaloisRing& ring = c.code.ring();
  const int n = c.code.n();
  CorollaryCheck out;
  out.acp = acp;
  const ChainMat c1 = ideal_rows(ring, n, c.code.f().poly);
  const ChainMat c2 = ideal_rows(ring, n, c.code.g().poly);
  const ChainMat d1 = ideal_rows(ring, n, d.code.f().poly);
  const ChainMat d2 = ideal_rows(ring, n, d.code.g().poly);
  out.component_lcp = lcp(c1, d1) && lcp(c2, d2);
  out.component_sigma = euclidean_dual(c1) == reverse_columns(d1) && euclidean_dual(c2) == reverse_columns(d2);
  out.trace_sigma = c.dual == d.sigma.raw();
  return out;
}

Entry make_entry(const AdditiveCyclicCode& c) { return Entry{c, trace_dual(c.raw()), c.project(), c.sigma()}; }

AcpVerdict verdict_from(const Entry& c, const Entry& d) {
  AcpVerdict v;
  v.definitional = definitional_raw(c.code, d.code);
  v.polynomial = is_acp_polynomial(c.code, d.code);
  v.matrix = matrix_raw(c.code.ctx(), c.code, c.dual, d.code, d.dual, &v.matrix_diagnostic);
  v.projection = definitional_raw(c.proj, d.proj);
  return v;
}

}  // namespace

ChainMat trace_product(const ExtensionContext& ctx, const std::vector<CyclicWord>& h, const std::vector<CyclicWord>& g) {
  const GaloisRing& ring = ctx.ring();
  ChainMat out(ring, h.size(), g.size());
  for (std::size_t i = 0; i < h.size(); ++i)
    for (std::size_t j = 0; j < g.size(); ++j) out.at(i, j) = word::circledast(ctx, h[i], g[j]);
  return out;
}

bool is_acp_definitional(const AdditiveCyclicCode& c, const AdditiveCyclicCode& d) {
  require_same_space(c, d);
  return definitional_raw(c, d);
}

bool is_acp_polynomial(const AdditiveCyclicCode& c, const AdditiveCyclicCode& d) {
  require_same_space(c, d);
  const std::uint64_t full = c.basis()->full_mask();
  const bool f_ok = (c.f().mask & d.f().mask) == 0 && (c.f().mask | d.f().mask) == full;
  const bool g_ok = (c.g().mask & d.g().mask) == 0 && (c.g().mask | d.g().mask) == full;
  return f_ok && g_ok;
}

bool is_acp_matrix(const AdditiveCyclicCode& c, const AdditiveCyclicCode& d, std::string* diagnostic) {
  require_same_space(c, d);
  return matrix_raw(c.ctx(), c, trace_dual(c.raw()), d, trace_dual(d.raw()), diagnostic);
}

bool is_acp_projection(const AdditiveCyclicCode& c, const AdditiveCyclicCode& d) {
  require_same_space(c, d);
  return definitional_raw(c.project(), d.project());
}

AcpVerdict acp_verdict(const AdditiveCyclicCode& c, const AdditiveCyclicCode& d) {
  require_same_space(c, d);
  return verdict_from(make_entry(c), make_entry(d));
}

std::vector<AcpPair> construct_acp_pairs(const FactorBasisPtr& basis, bool include_r, std::uint64_t budget) {
  const GaloisRing& ring = basis->ring();
  const auto divisors = basis->all_divisors();
  auto r_count = [&](const Divisor& f, const Divisor& g) -> std::uint64_t {
    if (!include_r) return 1;
    std::uint64_t c = 1;
    for (int k = 0; k < g.degree() - f.degree(); ++k) c = saturating_mul(c, ring.size());
    return c;
  };
  std::uint64_t total = 0;
  for (const auto& f1 : divisors)
    for (const auto& g1 : divisors) {
      const auto f2 = basis->complement(f1);
      const auto g2 = basis->complement(g1);
      total = std::min(std::numeric_limits<std::uint64_t>::max() - 1,
                       total + saturating_mul(r_count(f1, g1), r_count(f2, g2)));
    }
  if (total > budget)
    throw BudgetExceeded("ACP construction needs " + std::to_string(total) + " pairs, budget is " + std::to_string(budget));

  // Canonical codes grouped by (f mask, g mask).
  const auto codes = canonical_codes(basis, include_r, std::numeric_limits<std::uint64_t>::max());
  std::vector<std::vector<Entry>> by_divisors(divisors.size() * divisors.size());
  for (const auto& c : codes) by_divisors[c.f().mask * divisors.size() + c.g().mask].push_back(make_entry(c));

  std::vector<AcpPair> out;
  for (const auto& f1 : divisors)
    for (const auto& g1 : divisors) {
      const auto f2 = basis->complement(f1);
      const auto g2 = basis->complement(g1);
      for (const auto& c : by_divisors[f1.mask * divisors.size() + g1.mask])
        for (const auto& d : by_divisors[f2.mask * divisors.size() + g2.mask])
          out.push_back(AcpPair{c.code, d.code, verdict_from(c, d)});
    }
  return out;
}

std::size_t security_parameter(const AdditiveCyclicCode& c, const AdditiveCyclicCode& d, std::uint64_t budget) {
  if (!is_acp_definitional(c, d)) throw NotAcp("security parameter needs an ACP pair");
  const RawModule dd = trace_dual(d.raw());
  if (c.rank() == 0 && dd.is_zero()) throw ZeroCode("both C and the trace dual of D are zero");
  std::size_t best = std::numeric_limits<std::size_t>::max();
  if (c.rank() > 0) best = std::min(best, min_distance(c, budget));
  if (!dd.is_zero()) best = std::min(best, min_distance(dd, budget));
  return best;
}

CorollaryCheck corollary_check(const AdditiveCyclicCode& c, const AdditiveCyclicCode& d) {
  require_same_space(c, d);
  return corollary_from(make_entry(c), make_entry(d), is_acp_definitional(c, d));
}

AuditSummary audit_theorems(const FactorBasisPtr& basis, bool include_r, std::uint64_t budget) {
  const auto codes = canonical_codes(basis, include_r, budget);
  const std::uint64_t pairs = saturating_mul(codes.size(), codes.size());
  if (pairs > budget)
    throw BudgetExceeded("audit needs " + std::to_string(pairs) + " ordered pairs, budget is " + std::to_string(budget));
  std::vector<Entry> entries;
  entries.reserve(codes.size());
  for (const auto& c : codes) entries.push_back(make_entry(c));

  const ExtensionContext& ctx = *basis->context();
  AuditSummary out;
  out.codes = codes.size();
  for (const auto& c : entries)
    for (const auto& d : entries) {
      ++out.pairs_scanned;
      const AcpVerdict v = verdict_from(c, d);
      const bool both_r0 = c.code.twist().is_zero() && d.code.twist().is_zero();
      std::optional<CorollaryCheck> cor;
      if (both_r0) cor = corollary_from(c, d, v.definitional);
      const bool sigma_dual = c.dual == d.sigma.raw();

      AuditRecord rec{ctx.p(), ctx.e(), ctx.m(), c.code.n(), c.code, d.code, v, both_r0, sigma_dual, cor, false, {}};
      if (v.definitional) {
        if (!v.polynomial) rec.failed_claims.emplace_back("polynomial");
        if (!v.matrix) rec.failed_claims.emplace_back("matrix");
        if (!v.projection) rec.failed_claims.emplace_back("projection");
        if (!rec.norem_holds) rec.failed_claims.emplace_back("norem");
        if (!rec.sigma_dual_holds) rec.failed_claims.emplace_back("sigma_dual");
        if (cor && !cor->equivalent()) rec.failed_claims.emplace_back("corollary_equivalence");
        rec.counterexample = !rec.failed_claims.empty();
        out.records.push_back(std::move(rec));
      } else {
        if (v.polynomial) rec.failed_claims.emplace_back("polynomial");
        if (v.matrix) rec.failed_claims.emplace_back("matrix");
        if (v.projection) rec.failed_claims.emplace_back("projection");
        if (cor && !cor->equivalent()) rec.failed_claims.emplace_back("corollary_equivalence");
        if (!rec.failed_claims.empty()) {
          rec.counterexample = true;
          out.anomalies.push_back(std::move(rec));
        }
      }
    }
  return out;
}

}  // namespace chainacp
