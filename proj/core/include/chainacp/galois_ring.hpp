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

#ifndef CHAINACP_GALOIS_RING_HPP
#define CHAINACP_GALOIS_RING_HPP

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace chainacp {

/// Largest residue degree a GaloisRing may have (splitting rings included).
inline constexpr int kMaxDegree = 16;

/// Element of a Galois ring Z_{p^e}[y]/(h): coefficients c[0..degree) in [0, p^e),
/// unused slots are zero.
struct GrElem {
  std::array<std::int64_t, kMaxDegree> c{};

  friend bool operator==(const GrElem&, const GrElem&) = default;
  friend auto operator<=>(const GrElem&, const GrElem&) = default;
};

/// The Galois ring GR(p^e, degree) = Z_{p^e}[y]/(h), h the Hensel lift of the
/// lexicographically smallest primitive polynomial of the given degree over F_p.
///
/// Immutable after construction; every member function is const and pure.
class GaloisRing {
 public:
  /// Builds GR(p^e, degree). p must be prime, p^e < 2^31.
  GaloisRing(int p, int e, int degree);

  int p() const noexcept { return p_; }
  int e() const noexcept { return e_; }
  int degree() const noexcept { return degree_; }
  /// p^e, the characteristic.
  std::int64_t modulus() const noexcept { return modulus_; }
  /// p^degree, size of the residue field.
  std::int64_t residue_size() const noexcept { return residue_size_; }
  /// p^(e*degree); saturates at INT64_MAX.
  std::uint64_t size() const noexcept { return size_; }
  /// Monic defining polynomial, ascending, length degree+1.
  std::span<const std::int64_t> defining_poly() const noexcept { return defining_; }
  /// Residue of the defining polynomial mod p (the primitive polynomial over F_p).
  std::vector<std::int64_t> residue_defining_poly() const;

  GrElem zero() const noexcept { return {}; }
  GrElem one() const noexcept;
  GrElem from_int(std::int64_t v) const noexcept;
  GrElem from_coeffs(std::span<const std::int64_t> coeffs) const;
  /// The class of y.
  GrElem generator_y() const noexcept;

  GrElem add(const GrElem& x, const GrElem& y) const noexcept;
  GrElem sub(const GrElem& x, const GrElem& y) const noexcept;
  GrElem neg(const GrElem& x) const noexcept;
  GrElem mul(const GrElem& x, const GrElem& y) const noexcept;
  GrElem scale(const GrElem& x, std::int64_t k) const noexcept;
  GrElem pow(GrElem x, std::uint64_t k) const noexcept;

  bool is_zero(const GrElem& x) const noexcept { return x == GrElem{}; }
  /// Largest v with x in p^v R; e for zero.
  int valuation(const GrElem& x) const noexcept;
  bool is_unit(const GrElem& x) const noexcept { return valuation(x) == 0; }
  /// Throws NotAUnit.
  GrElem inv(const GrElem& x) const;

  /// Some t with x = p^v t. Requires valuation(x) >= v.
  GrElem divide_by_p_power(const GrElem& x, int v) const noexcept;
  /// Canonical representative of x modulo p^v R (coefficientwise remainder).
  GrElem reduce_mod_p_power(const GrElem& x, int v) const noexcept;
  /// Coefficients reduced mod p, still as an element of this ring.
  GrElem residue(const GrElem& x) const noexcept;

  /// Fixed point of t -> t^q reached from x; the unique Teichmuller element
  /// congruent to x modulo p.
  GrElem teichmuller_lift(const GrElem& x) const noexcept;
  /// All q Teichmuller elements, ordered by the canonical order of their residues.
  std::vector<GrElem> teichmuller_set() const;
  /// Deterministic element of multiplicative order q - 1.
  GrElem teichmuller_generator() const;

  /// Position in the canonical (lexicographic on coefficient sequence) order.
  std::uint64_t index(const GrElem& x) const noexcept;
  GrElem element(std::uint64_t idx) const noexcept;

  /// "5", or "[1,0,2]" for degree > 1.
  std::string format(const GrElem& x) const;

  friend bool operator==(const GaloisRing& a, const GaloisRing& b) noexcept {
    return a.p_ == b.p_ && a.e_ == b.e_ && a.degree_ == b.degree_ && a.defining_ == b.defining_;
  }

 private:
  std::int64_t reduce(std::int64_t v) const noexcept {
    v %= modulus_;
    return v < 0 ? v + modulus_ : v;
  }

  int p_;
  int e_;
  int degree_;
  std::int64_t modulus_;
  std::int64_t residue_size_;
  std::uint64_t size_;
  std::vector<std::int64_t> defining_;
};

/// Distinct prime factors of n, ascending.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);
bool is_prime(std::uint64_t n);

}  // namespace chainacp

#endif  // CHAINACP_GALOIS_RING_HPP
