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

#ifndef CHAINACP_RING_TOWER_HPP
#define CHAINACP_RING_TOWER_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <utility>

#include "chainacp/galois_ring.hpp"

namespace chainacp {

/// Element of R = GR(p^e, m).
using RElem = GrElem;

/// Element a + b*mu of S = R[z]/(z^2 - theta), mu the class of z.
struct SElem {
  RElem a;
  RElem b;

  friend bool operator==(const SElem&, const SElem&) = default;
  friend auto operator<=>(const SElem&, const SElem&) = default;
};

/// The tower Z_{p^e} < R = GR(p^e, m) < S = GR(p^e, 2m), with S presented on
/// the R-basis {1, mu}, mu^2 = theta, theta the Teichmuller lift of the smallest
/// quadratic non-residue of F_q. Frobenius is a + b*mu -> a - b*mu and the trace
/// is a + b*mu -> 2a.
///
/// Immutable after construction and shared through ContextPtr.
class ExtensionContext {
 public:
  /// Throws UnsupportedCharacteristic for p = 2 or non-prime p.
  static std::shared_ptr<const ExtensionContext> build(int p, int e, int m);

  int p() const noexcept { return ring_.p(); }
  int e() const noexcept { return ring_.e(); }
  int m() const noexcept { return ring_.degree(); }
  /// p^m.
  std::int64_t q() const noexcept { return ring_.residue_size(); }
  const GaloisRing& ring() const noexcept { return ring_; }

  const RElem& theta() const noexcept { return theta_; }
  SElem mu() const noexcept { return {ring_.zero(), ring_.one()}; }
  /// Teichmuller element of S with multiplicative order q^2 - 1.
  const SElem& xi() const noexcept { return xi_; }
  /// xi^((q^2-1)/(q-1)), an element of R of order q - 1.
  const RElem& zeta() const noexcept { return zeta_; }
  /// p * 1, generator of the maximal ideal of R.
  RElem gamma() const noexcept { return ring_.from_int(p()); }

  /// |R| and |S| (saturating).
  std::uint64_t r_size() const noexcept { return ring_.size(); }
  std::uint64_t s_size() const noexcept;

  // S arithmetic.
  SElem s_zero() const noexcept { return {}; }
  SElem s_one() const noexcept { return {ring_.one(), ring_.zero()}; }
  SElem embed(const RElem& r) const noexcept { return {r, ring_.zero()}; }
  SElem s_add(const SElem& x, const SElem& y) const noexcept;
  SElem s_sub(const SElem& x, const SElem& y) const noexcept;
  SElem s_neg(const SElem& x) const noexcept;
  SElem s_mul(const SElem& x, const SElem& y) const noexcept;
  /// r * x for r in R.
  SElem s_scale(const RElem& r, const SElem& x) const noexcept;
  SElem s_pow(SElem x, std::uint64_t k) const noexcept;
  bool s_is_unit(const SElem& x) const noexcept;
  /// Throws NotAUnit.
  SElem s_inv(const SElem& x) const;
  /// The maximal k with x in p^k S.
  int s_valuation(const SElem& x) const noexcept;

  SElem frobenius(const SElem& x) const noexcept;
  RElem trace(const SElem& x) const noexcept;
  /// (a, b) with x = a + mu*b, recovered through the trace: a = Tr(x)/2, b = (x - a)/mu.
  std::pair<RElem, RElem> decompose(const SElem& x) const;
  SElem compose(const RElem& a, const RElem& b) const noexcept { return {a, b}; }
  bool in_base(const SElem& x) const noexcept { return ring_.is_zero(x.b); }

  /// Fixed point of t -> t^(q^2) starting at x.
  SElem teichmuller_lift(const SElem& x) const noexcept;
  RElem teichmuller_lift(const RElem& x) const noexcept { return ring_.teichmuller_lift(x); }
  /// The q^2 Teichmuller elements of S.
  std::vector<SElem> teichmuller_set_s() const;

  /// Coordinates (c0, c1) of x on the basis {1, xi}.
  std::pair<RElem, RElem> to_xi_basis(const SElem& x) const;
  SElem from_xi_basis(const RElem& c0, const RElem& c1) const noexcept;

  /// Position of x in the canonical order (a-coefficients, then b-coefficients).
  std::uint64_t s_index(const SElem& x) const noexcept;
  SElem s_element(std::uint64_t idx) const noexcept;

  /// "a+b*u" with ring-formatted coefficients.
  std::string format(const SElem& x) const;

  /// Residue context (p, 1, m): same choices of h and theta reduced mod p.
  std::shared_ptr<const ExtensionContext> residue_context() const;

  friend bool operator==(const ExtensionContext& a, const ExtensionContext& b) noexcept {
    return a.ring_ == b.ring_ && a.theta_ == b.theta_;
  }

 private:
  ExtensionContext(GaloisRing ring, RElem theta);

  GaloisRing ring_;
  RElem theta_;
  RElem half_;
  SElem xi_;
  RElem zeta_;
};

using ContextPtr = std::shared_ptr<const ExtensionContext>;

}  // namespace chainacp

#endif  // CHAINACP_RING_TOWER_HPP
