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

#include "chainacp/ring_tower.hpp"

#include <limits>
#include <stdexcept>

#include "chainacp/errors.hpp"

namespace chainacp {

ContextPtr ExtensionContext::build(int p, int e, int m) {
  if (p == 2)
    throw UnsupportedCharacteristic(
        "characteristic 2 is not supported: the trace on R is r -> 2r and must be injective, so p must be odd");
  if (p < 2 || !is_prime(static_cast<std::uint64_t>(p)))
    throw UnsupportedCharacteristic("p = " + std::to_string(p) + " is not an odd prime");
  if (e < 1 || m < 1) throw std::invalid_argument("build_context: e and m must be positive");
  if (2 * m > kMaxDegree) throw std::invalid_argument("build_context: m too large");
  GaloisRing ring(p, e, m);

  // theta: Teichmuller lift of the first non-square of F_q in canonical order.
  const std::uint64_t half_order = static_cast<std::uint64_t>(ring.residue_size() - 1) / 2;
  RElem theta;
  bool found = false;
  for (const RElem& t : ring.teichmuller_set()) {
    if (ring.is_zero(t)) continue;
    if (ring.pow(t, half_order) != ring.one()) {
      theta = t;
      found = true;
      break;
    }
  }
  if (!found) throw std::logic_error("build_context: no quadratic non-residue");
  return ContextPtr(new ExtensionContext(std::move(ring), theta));
}

ExtensionContext::ExtensionContext(GaloisRing ring, RElem theta) : ring_(std::move(ring)), theta_(theta) {
  half_ = ring_.inv(ring_.from_int(2));

  const std::uint64_t q = static_cast<std::uint64_t>(ring_.residue_size());
  const std::uint64_t order = q * q - 1;
  const auto factors = prime_factors(order);
  const int m = ring_.degree();
  const std::uint64_t total = q * q;
  bool found = false;
  for (std::uint64_t idx = 1; idx < total && !found; ++idx) {
    // Residue digits, most significant first: a_0..a_{m-1}, b_0..b_{m-1}.
    SElem cand;
    std::uint64_t v = idx;
    for (int i = 2 * m - 1; i >= 0; --i) {
      const auto digit = static_cast<std::int64_t>(v % static_cast<std::uint64_t>(ring_.p()));
      v /= static_cast<std::uint64_t>(ring_.p());
      if (i < m)
        cand.a.c[i] = digit;
      else
        cand.b.c[i - m] = digit;
    }
    const SElem t = teichmuller_lift(cand);
    bool ok = true;
    for (auto f : factors) {
      if (s_pow(t, order / f) == s_one()) {
        ok = false;
        break;
      }
    }
    if (ok) {
      xi_ = t;
      found = true;
    }
  }
  if (!found) throw std::logic_error("build_context: no generator of the Teichmuller group");
  const SElem z = s_pow(xi_, q + 1);
  zeta_ = z.a;
}

std::uint64_t ExtensionContext::s_size() const noexcept {
  const std::uint64_t r = r_size();
  if (r > std::numeric_limits<std::uint32_t>::max()) return std::numeric_limits<std::uint64_t>::max();
  return r * r;
}

SElem ExtensionContext::s_add(const SElem& x, const SElem& y) const noexcept {
  return {ring_.add(x.a, y.a), ring_.add(x.b, y.b)};
}

SElem ExtensionContext::s_sub(const SElem& x, const SElem& y) const noexcept {
  return {ring_.sub(x.a, y.a), ring_.sub(x.b, y.b)};
}

SElem ExtensionContext::s_neg(const SElem& x) const noexcept { return {ring_.neg(x.a), ring_.neg(x.b)}; }

SElem ExtensionContext::s_mul(const SElem& x, const SElem& y) const noexcept {
  // (a + b mu)(c + d mu) = (ac + theta bd) + (ad + bc) mu
  const RElem ac = ring_.mul(x.a, y.a);
  const RElem bd = ring_.mul(x.b, y.b);
  const RElem ad = ring_.mul(x.a, y.b);
  const RElem bc = ring_.mul(x.b, y.a);
  return {ring_.add(ac, ring_.mul(theta_, bd)), ring_.add(ad, bc)};
}

SElem ExtensionContext::s_scale(const RElem& r, const SElem& x) const noexcept {
  return {ring_.mul(r, x.a), ring_.mul(r, x.b)};
}

SElem ExtensionContext::s_pow(SElem x, std::uint64_t k) const noexcept {
  SElem r = s_one();
  while (k > 0) {
    if (k & 1U) r = s_mul(r, x);
    x = s_mul(x, x);
    k >>= 1U;
  }
  return r;
}

int ExtensionContext::s_valuation(const SElem& x) const noexcept {
  return std::min(ring_.valuation(x.a), ring_.valuation(x.b));
}

bool ExtensionContext::s_is_unit(const SElem& x) const noexcept { return s_valuation(x) == 0; }

SElem ExtensionContext::s_inv(const SElem& x) const {
  const int v = s_valuation(x);
  if (v != 0) throw NotAUnit("element " + format(x) + " is not a unit (valuation " + std::to_string(v) + ")", v);
  // norm a^2 - theta b^2 is a unit because theta is a non-square mod p.
  const RElem norm = ring_.sub(ring_.mul(x.a, x.a), ring_.mul(theta_, ring_.mul(x.b, x.b)));
  const RElem ninv = ring_.inv(norm);
  return {ring_.mul(x.a, ninv), ring_.mul(ring_.neg(x.b), ninv)};
}

SElem ExtensionContext::frobenius(const SElem& x) const noexcept { return {x.a, ring_.neg(x.b)}; }

RElem ExtensionContext::trace(const SElem& x) const noexcept {
  const SElem t = s_add(x, frobenius(x));
  return t.a;
}

std::pair<RElem, RElem> ExtensionContext::decompose(const SElem& x) const {
  const RElem a = ring_.mul(trace(x), half_);
  const SElem rest = s_mul(s_sub(x, embed(a)), s_inv(mu()));
  return {a, rest.a};
}

SElem ExtensionContext::teichmuller_lift(const SElem& x) const noexcept {
  const std::uint64_t q2 = static_cast<std::uint64_t>(q()) * static_cast<std::uint64_t>(q());
  SElem y = x;
  for (;;) {
    const SElem next = s_pow(y, q2);
    if (next == y) return y;
    y = next;
  }
}

std::vector<SElem> ExtensionContext::teichmuller_set_s() const {
  std::vector<SElem> out;
  const auto r = ring_.teichmuller_set();
  out.reserve(r.size() * r.size());
  // Residues of pairs of R-Teichmuller elements cover F_{q^2} once each.
  for (const auto& a : r)
    for (const auto& b : r) out.push_back(teichmuller_lift(SElem{a, b}));
  return out;
}

std::pair<RElem, RElem> ExtensionContext::to_xi_basis(const SElem& x) const {
  const RElem c1 = ring_.mul(x.b, ring_.inv(xi_.b));
  const RElem c0 = ring_.sub(x.a, ring_.mul(c1, xi_.a));
  return {c0, c1};
}

SElem ExtensionContext::from_xi_basis(const RElem& c0, const RElem& c1) const noexcept {
  return s_add(embed(c0), s_scale(c1, xi_));
}

std::uint64_t ExtensionContext::s_index(const SElem& x) const noexcept {
  return ring_.index(x.a) * r_size() + ring_.index(x.b);
}

SElem ExtensionContext::s_element(std::uint64_t idx) const noexcept {
  return {ring_.element(idx / r_size()), ring_.element(idx % r_size())};
}

std::string ExtensionContext::format(const SElem& x) const {
  return ring_.format(x.a) + "+" + ring_.format(x.b) + "*u";
}

ContextPtr ExtensionContext::residue_context() const { return build(p(), 1, m()); }

}  // namespace chainacp
