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

#ifndef CHAINACP_POLY_CYCLIC_HPP
#define CHAINACP_POLY_CYCLIC_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "chainacp/ring_tower.hpp"

namespace chainacp {

/// Polynomial over a Galois ring, ascending coefficients, trailing zeros trimmed.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<GrElem> coeffs);
  static Poly from_ints(const GaloisRing& ring, const std::vector<std::int64_t>& coeffs);
  static Poly constant(const GrElem& c) { return Poly({c}); }
  static Poly monomial(const GaloisRing& ring, int k, const GrElem& c);
  /// x^n - 1.
  static Poly xn_minus_1(const GaloisRing& ring, int n);

  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  const std::vector<GrElem>& coeffs() const noexcept { return coeffs_; }
  GrElem coeff(int i) const noexcept { return i >= 0 && i < static_cast<int>(coeffs_.size()) ? coeffs_[i] : GrElem{}; }
  const GrElem& leading() const { return coeffs_.back(); }

  friend bool operator==(const Poly&, const Poly&) = default;
  friend auto operator<=>(const Poly&, const Poly&) = default;

 private:
  std::vector<GrElem> coeffs_;
};

namespace poly {

Poly add(const GaloisRing& ring, const Poly& a, const Poly& b);
Poly sub(const GaloisRing& ring, const Poly& a, const Poly& b);
Poly neg(const GaloisRing& ring, const Poly& a);
Poly mul(const GaloisRing& ring, const Poly& a, const Poly& b);
Poly scale(const GaloisRing& ring, const GrElem& c, const Poly& a);
bool is_monic(const GaloisRing& ring, const Poly& a);
/// (quotient, remainder) with deg(remainder) < deg(b). Throws NonMonicDivisor.
std::pair<Poly, Poly> divmod_monic(const GaloisRing& ring, const Poly& a, const Poly& b);
Poly rem(const GaloisRing& ring, const Poly& a, const Poly& b);
/// Exact quotient a / b (b monic); throws NotADivisor when the remainder is nonzero.
Poly exact_div(const GaloisRing& ring, const Poly& a, const Poly& b);
bool divides(const GaloisRing& ring, const Poly& b, const Poly& a);
GrElem eval(const GaloisRing& ring, const Poly& a, const GrElem& x);
/// x^deg(a) a(1/x). Throws InvalidCode on the zero polynomial.
Poly reciprocal(const Poly& a);
/// reciprocal(a) scaled by a(0)^-1 so that it is monic. Throws NotAUnit if a(0) is not a unit.
Poly monic_reciprocal(const GaloisRing& ring, const Poly& a);
/// a mod (x^n - 1), as a polynomial of degree < n.
Poly reduce_cyclic(const GaloisRing& ring, const Poly& a, int n);
/// Coefficientwise residue mod p re-expressed in `target` (a ring with the same p and degree).
Poly change_ring(const GaloisRing& from, const GaloisRing& target, const Poly& a);
/// "x^2+4x+8" for degree-one rings, list form otherwise.
std::string format(const GaloisRing& ring, const Poly& a);
/// "[8,4,1]" ascending; ring elements of degree > 1 as nested lists.
std::string format_list(const GaloisRing& ring, const Poly& a);

}  // namespace poly

/// Element of S_n = S[x]/(x^n - 1), coefficient i of x^i.
class CyclicWord {
 public:
  CyclicWord() = default;
  explicit CyclicWord(std::size_t n) : coeffs_(n) {}
  explicit CyclicWord(std::vector<SElem> coeffs) : coeffs_(std::move(coeffs)) {}

  std::size_t n() const noexcept { return coeffs_.size(); }
  const SElem& operator[](std::size_t i) const noexcept { return coeffs_[i]; }
  SElem& operator[](std::size_t i) noexcept { return coeffs_[i]; }
  const std::vector<SElem>& coeffs() const noexcept { return coeffs_; }

  friend bool operator==(const CyclicWord&, const CyclicWord&) = default;
  friend auto operator<=>(const CyclicWord&, const CyclicWord&) = default;

 private:
  std::vector<SElem> coeffs_;
};

namespace word {

/// a(x) + mu b(x) reduced mod x^n - 1.
CyclicWord from_parts(const ExtensionContext& ctx, int n, const Poly& a, const Poly& b);
Poly a_part(const CyclicWord& w);
Poly b_part(const CyclicWord& w);
CyclicWord add(const ExtensionContext& ctx, const CyclicWord& u, const CyclicWord& v);
CyclicWord sub(const ExtensionContext& ctx, const CyclicWord& u, const CyclicWord& v);
CyclicWord scale(const ExtensionContext& ctx, const RElem& r, const CyclicWord& u);
CyclicWord scale_s(const ExtensionContext& ctx, const SElem& s, const CyclicWord& u);
/// x * u, i.e. (c_{n-1}, c_0, ..., c_{n-2}).
CyclicWord shift(const CyclicWord& u, std::size_t k = 1);
/// Product in S_n. Throws LevelMismatch on length mismatch.
CyclicWord cyclic_mul(const ExtensionContext& ctx, const CyclicWord& u, const CyclicWord& v);
/// sum_i u_i v_i in S.
SElem star(const ExtensionContext& ctx, const CyclicWord& u, const CyclicWord& v);
/// Tr(star(u, v)) in R.
RElem circledast(const ExtensionContext& ctx, const CyclicWord& u, const CyclicWord& v);
/// Coordinate reversal i -> n-1-i.
CyclicWord sigma(const CyclicWord& u);
std::size_t weight(const ExtensionContext& ctx, const CyclicWord& u);
bool is_zero(const CyclicWord& u);
/// R^{2n} coordinates: all a-parts, then all b-parts.
std::vector<RElem> flatten(const CyclicWord& u);
CyclicWord unflatten(std::span<const RElem> v);
std::string format(const ExtensionContext& ctx, const CyclicWord& u);

}  // namespace word

/// q-cyclotomic cosets modulo n, each sorted, ordered by smallest element.
/// Throws LengthNotCoprime when gcd(q, n) != 1.
std::vector<std::vector<int>> cyclotomic_cosets(std::int64_t q, int n);

/// Monic divisor of x^n - 1 tagged with its subset of basic irreducible factors.
struct Divisor {
  std::uint64_t mask = 0;
  Poly poly;

  int degree() const noexcept { return poly.degree(); }
  friend bool operator==(const Divisor& a, const Divisor& b) noexcept { return a.mask == b.mask; }
};

/// Factorization of x^n - 1 over R into monic basic irreducibles, one per
/// q-cyclotomic coset, ordered by degree then by smallest coset element.
class FactorBasis : public std::enable_shared_from_this<FactorBasis> {
 public:
  /// Throws LengthNotCoprime when p | n.
  static std::shared_ptr<const FactorBasis> build(ContextPtr ctx, int n);

  const ContextPtr& context() const noexcept { return ctx_; }
  const GaloisRing& ring() const noexcept { return ctx_->ring(); }
  int n() const noexcept { return n_; }
  std::size_t count() const noexcept { return factors_.size(); }
  const std::vector<Poly>& factors() const noexcept { return factors_; }
  /// Coset of exponents i with omega^i a root of factors()[k].
  const std::vector<std::vector<int>>& cosets() const noexcept { return cosets_; }
  /// factors() mod p, as polynomials over the residue field (coefficients in [0, p)).
  std::vector<Poly> residue_factors() const;
  const Poly& xn1() const noexcept { return xn1_; }
  /// The same factorization reduced mod p, over the residue context; *this when e = 1.
  /// Masks agree: bit k of a residue divisor is the residue of factors()[k].
  std::shared_ptr<const FactorBasis> residue_basis() const { return residue_ ? residue_ : shared_from_this(); }

  std::uint64_t full_mask() const noexcept { return (std::uint64_t{1} << factors_.size()) - 1; }
  Divisor divisor(std::uint64_t mask) const;
  Divisor one() const { return divisor(0); }
  Divisor full() const { return divisor(full_mask()); }
  /// All 2^count divisors ordered by mask.
  std::vector<Divisor> all_divisors() const;
  /// The divisor equal to a (monic, dividing x^n - 1), else nullopt.
  std::optional<Divisor> identify(const Poly& a) const;
  /// Like identify but throws NotADivisor.
  Divisor require_divisor(const Poly& a) const;

  Divisor gcd(const Divisor& a, const Divisor& b) const { return divisor(a.mask & b.mask); }
  Divisor lcm(const Divisor& a, const Divisor& b) const { return divisor(a.mask | b.mask); }
  /// (x^n - 1) / a.
  Divisor complement(const Divisor& a) const { return divisor(full_mask() & ~a.mask); }
  /// monic_reciprocal(a), again a divisor.
  Divisor reciprocal(const Divisor& a) const;

 private:
  FactorBasis() = default;

  ContextPtr ctx_;
  int n_ = 0;
  std::vector<Poly> factors_;
  std::vector<std::vector<int>> cosets_;
  Poly xn1_;
  std::shared_ptr<const FactorBasis> residue_;
};

using FactorBasisPtr = std::shared_ptr<const FactorBasis>;

/// w = gcd(f, g), f = w f1, g = w g1, w f1 g1 ell = x^n - 1.
struct DivisorSplit {
  Divisor w;
  Divisor f1;
  Divisor g1;
  Divisor ell;
};

DivisorSplit divisor_split(const FactorBasis& basis, const Divisor& f, const Divisor& g);

}  // namespace chainacp

#endif  // CHAINACP_POLY_CYCLIC_HPP
