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

#ifndef CHAINACP_ADDITIVE_CODES_HPP
#define CHAINACP_ADDITIVE_CODES_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "chainacp/chain_linalg.hpp"
#include "chainacp/poly_cyclic.hpp"

namespace chainacp {

/// R-submodule of S^n closed under the cyclic shift, kept as a Howell form over R^{2n}.
/// Not necessarily free; sums, intersections and duals of codes land here.
class RawModule {
 public:
  /// Span of all cyclic shifts of `words`.
  static RawModule cyclic_span(FactorBasisPtr basis, const std::vector<CyclicWord>& words);
  /// Row module of `rows` (2n columns) taken as is; the caller vouches for shift closure.
  static RawModule from_rows(FactorBasisPtr basis, const ChainMat& rows);

  const FactorBasisPtr& basis() const noexcept { return basis_; }
  int n() const noexcept { return basis_->n(); }
  const ChainMat& howell() const noexcept { return howell_; }
  RankProfile profile() const { return rank_profile(howell_); }
  bool is_zero() const noexcept { return howell_.rows() == 0; }
  /// A basis of the module when it is free.
  std::optional<ChainMat> basis_rows() const { return free_basis(howell_); }
  bool is_free() const { return basis_rows().has_value(); }
  bool contains(const CyclicWord& w) const;
  std::vector<CyclicWord> rows() const;

  RawModule sum(const RawModule& other) const;
  RawModule intersect(const RawModule& other) const;

  friend bool operator==(const RawModule& a, const RawModule& b) noexcept { return a.howell_ == b.howell_; }

 private:
  RawModule(FactorBasisPtr basis, ChainMat howell) : basis_(std::move(basis)), howell_(std::move(howell)) {}

  FactorBasisPtr basis_;
  ChainMat howell_;
};

/// Free additive cyclic code C = <f + mu r0, mu g> in S_n with f, g monic divisors
/// of x^n - 1 and deg r0 < deg g (r0 = 0 when g = 1). The triple (f, r0, g) is
/// unique, so equality of codes is equality of triples. Generator rows are
/// x^i (f + mu r0) for i < n - deg f, then x^j mu g for j < n - deg g.
class AdditiveCyclicCode {
 public:
  /// The (f, r, g) form: r0 = f r. Throws InvalidCode when deg(f r) >= deg g and r != 0.
  static AdditiveCyclicCode make(FactorBasisPtr basis, const Divisor& f, const Poly& r, const Divisor& g);
  /// Twisted form. Throws InvalidCode unless deg r0 < deg g and gcd(f, g) divides r0.
  static AdditiveCyclicCode make_twisted(FactorBasisPtr basis, const Divisor& f, const Poly& r0, const Divisor& g);
  /// Cyclic span of the words. Throws NotFree when the span is not a free module and
  /// NoCanonicalTriple when it is free but not of the form above.
  static AdditiveCyclicCode from_generators(FactorBasisPtr basis, const std::vector<CyclicWord>& words);
  static AdditiveCyclicCode from_module(const RawModule& m);

  const FactorBasisPtr& basis() const noexcept { return basis_; }
  const ExtensionContext& ctx() const noexcept { return *basis_->context(); }
  const GaloisRing& ring() const noexcept { return basis_->ring(); }
  int n() const noexcept { return basis_->n(); }
  const Divisor& f() const noexcept { return f_; }
  const Divisor& g() const noexcept { return g_; }
  const Poly& twist() const noexcept { return r0_; }
  /// r0 / f when f divides r0.
  std::optional<Poly> r() const;
  bool f_divides_twist() const { return r().has_value(); }

  /// 2n - deg f - deg g.
  int rank() const noexcept { return 2 * n() - f_.degree() - g_.degree(); }
  /// log_p |C| = e m rank.
  std::uint64_t log_cardinality() const noexcept;
  std::vector<CyclicWord> generator_words() const;
  /// rank x 2n matrix of generator_words() flattened.
  ChainMat generator_matrix() const;
  const ChainMat& howell() const noexcept { return raw_.howell(); }
  const RawModule& raw() const noexcept { return raw_; }

  bool contains(const CyclicWord& w) const { return raw_.contains(w); }
  /// Visits all |R|^rank codewords. Throws BudgetExceeded when that exceeds budget.
  void for_each_word(std::uint64_t budget, const std::function<void(const CyclicWord&)>& fn) const;
  std::vector<CyclicWord> enumerate(std::uint64_t budget) const;

  /// (f, r0, g) mod p over the residue context.
  AdditiveCyclicCode project() const;
  /// Coordinate reversal applied to every codeword.
  AdditiveCyclicCode sigma() const;

  /// "f=..., r0=..., g=..." for messages.
  std::string describe() const;

  friend bool operator==(const AdditiveCyclicCode& a, const AdditiveCyclicCode& b) noexcept {
    return a.n() == b.n() && *a.basis_->context() == *b.basis_->context() && a.f_ == b.f_ && a.g_ == b.g_ &&
           a.r0_ == b.r0_;
  }

 private:
  AdditiveCyclicCode(FactorBasisPtr basis, Divisor f, Poly r0, Divisor g);

  FactorBasisPtr basis_;
  Divisor f_;
  Poly r0_;
  Divisor g_;
  RawModule raw_;
};

/// Minimum nonzero Hamming weight over S. Throws ZeroCode and BudgetExceeded.
std::size_t min_distance(const AdditiveCyclicCode& c, std::uint64_t budget);
/// Same for a free module; throws NotFree otherwise.
std::size_t min_distance(const RawModule& m, std::uint64_t budget);

/// Every canonical (f, r, g) in order of (f mask, g mask, r), r ranging over all
/// polynomials with deg r < deg g - deg f when include_r, else r = 0 only.
/// Throws BudgetExceeded when the count exceeds budget.
std::vector<AdditiveCyclicCode> canonical_codes(const FactorBasisPtr& basis, bool include_r, std::uint64_t budget);

/// Default enumeration budget.
inline constexpr std::uint64_t kDefaultBudget = 10'000'000;

}  // namespace chainacp

#endif  // CHAINACP_ADDITIVE_CODES_HPP
