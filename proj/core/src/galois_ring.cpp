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

#include "chainacp/galois_ring.hpp"

#include <limits>
#include <sstream>
#include <string>

#include "chainacp/errors.hpp"
#include "zpoly.hpp"

namespace chainacp {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

GaloisRing::GaloisRing(int p, int e, int degree) : p_(p), e_(e), degree_(degree) {
  if (p < 2 || !is_prime(static_cast<std::uint64_t>(p)))
    throw UnsupportedCharacteristic("residue characteristic " + std::to_string(p) + " is not prime");
  if (e < 1 || degree < 1 || degree > kMaxDegree)
    throw std::invalid_argument("GaloisRing: need e >= 1 and 1 <= degree <= " + std::to_string(kMaxDegree));
  modulus_ = 1;
  for (int i = 0; i < e; ++i) {
    modulus_ *= p;
    if (modulus_ >= (std::int64_t{1} << 31)) throw std::invalid_argument("GaloisRing: p^e must stay below 2^31");
  }
  residue_size_ = 1;
  for (int i = 0; i < degree; ++i) {
    residue_size_ *= p;
    if (residue_size_ > (std::int64_t{1} << 24)) throw std::invalid_argument("GaloisRing: residue field too large");
  }
  size_ = 1;
  for (int i = 0; i < degree; ++i) {
    if (size_ > std::numeric_limits<std::uint64_t>::max() / static_cast<std::uint64_t>(modulus_)) {
      size_ = std::numeric_limits<std::uint64_t>::max();
      break;
    }
    size_ *= static_cast<std::uint64_t>(modulus_);
  }

  const zpoly::ZPoly primitive = zpoly::smallest_primitive(p, degree);
  // The roots of a primitive polynomial have order q-1, so its lift is the
  // factor of x^(q-1) - 1 with that residue.
  zpoly::ZPoly target(static_cast<std::size_t>(residue_size_ - 1), 0);
  target[0] = -1;
  target.push_back(1);
  defining_ = zpoly::hensel_lift_factor(target, primitive, p, e);
}

std::vector<std::int64_t> GaloisRing::residue_defining_poly() const {
  std::vector<std::int64_t> out(defining_.begin(), defining_.end());
  for (auto& c : out) c %= p_;
  return out;
}

GrElem GaloisRing::one() const noexcept { return from_int(1); }

GrElem GaloisRing::from_int(std::int64_t v) const noexcept {
  GrElem x;
  x.c[0] = reduce(v);
  return x;
}

GrElem GaloisRing::from_coeffs(std::span<const std::int64_t> coeffs) const {
  GrElem x;
  // Higher powers of y are folded back through the defining polynomial.
  std::vector<std::int64_t> work(coeffs.begin(), coeffs.end());
  for (auto& v : work) v = reduce(v);
  for (int k = static_cast<int>(work.size()) - 1; k >= degree_; --k) {
    const std::int64_t lead = work[k];
    if (lead == 0) continue;
    for (int i = 0; i < degree_; ++i) work[k - degree_ + i] = reduce(work[k - degree_ + i] - lead * defining_[i]);
    work[k] = 0;
  }
  for (int i = 0; i < degree_ && i < static_cast<int>(work.size()); ++i) x.c[i] = work[i];
  return x;
}

GrElem GaloisRing::generator_y() const noexcept {
  if (degree_ == 1) return from_int(-defining_[0]);
  GrElem x;
  x.c[1] = 1;
  return x;
}

GrElem GaloisRing::add(const GrElem& x, const GrElem& y) const noexcept {
  GrElem r;
  for (int i = 0; i < degree_; ++i) {
    std::int64_t v = x.c[i] + y.c[i];
    r.c[i] = v >= modulus_ ? v - modulus_ : v;
  }
  return r;
}

GrElem GaloisRing::sub(const GrElem& x, const GrElem& y) const noexcept {
  GrElem r;
  for (int i = 0; i < degree_; ++i) {
    std::int64_t v = x.c[i] - y.c[i];
    r.c[i] = v < 0 ? v + modulus_ : v;
  }
  return r;
}

GrElem GaloisRing::neg(const GrElem& x) const noexcept {
  GrElem r;
  for (int i = 0; i < degree_; ++i) r.c[i] = x.c[i] == 0 ? 0 : modulus_ - x.c[i];
  return r;
}

GrElem GaloisRing::mul(const GrElem& x, const GrElem& y) const noexcept {
  if (degree_ == 1) return from_int(x.c[0] * y.c[0]);
  std::array<std::int64_t, 2 * kMaxDegree> prod{};
  for (int i = 0; i < degree_; ++i) {
    if (x.c[i] == 0) continue;
    for (int j = 0; j < degree_; ++j) prod[i + j] = (prod[i + j] + x.c[i] * y.c[j]) % modulus_;
  }
  for (int k = 2 * degree_ - 2; k >= degree_; --k) {
    const std::int64_t lead = prod[k];
    if (lead == 0) continue;
    for (int i = 0; i < degree_; ++i) prod[k - degree_ + i] = (prod[k - degree_ + i] + (modulus_ - lead) * defining_[i]) % modulus_;
  }
  GrElem r;
  for (int i = 0; i < degree_; ++i) r.c[i] = prod[i];
  return r;
}

GrElem GaloisRing::scale(const GrElem& x, std::int64_t k) const noexcept {
  const std::int64_t kk = reduce(k);
  GrElem r;
  for (int i = 0; i < degree_; ++i) r.c[i] = x.c[i] * kk % modulus_;
  return r;
}

GrElem GaloisRing::pow(GrElem x, std::uint64_t k) const noexcept {
  GrElem r = one();
  while (k > 0) {
    if (k & 1U) r = mul(r, x);
    x = mul(x, x);
    k >>= 1U;
  }
  return r;
}

int GaloisRing::valuation(const GrElem& x) const noexcept {
  int best = e_;
  for (int i = 0; i < degree_; ++i) {
    std::int64_t v = x.c[i];
    if (v == 0) continue;
    int val = 0;
    while (v % p_ == 0) {
      v /= p_;
      ++val;
    }
    if (val < best) best = val;
  }
  return best;
}

GrElem GaloisRing::inv(const GrElem& x) const {
  const int v = valuation(x);
  if (v != 0) throw NotAUnit("element " + format(x) + " is not a unit (valuation " + std::to_string(v) + ")", v);
  // Invert the residue by Fermat in F_q, then Newton-lift: y <- y(2 - xy).
  GrElem y = pow(x, static_cast<std::uint64_t>(residue_size_) - 2);
  const GrElem two = from_int(2);
  for (int k = 0; k < e_; ++k) y = mul(y, sub(two, mul(x, y)));
  return y;
}

GrElem GaloisRing::divide_by_p_power(const GrElem& x, int v) const noexcept {
  std::int64_t pv = 1;
  for (int i = 0; i < v; ++i) pv *= p_;
  GrElem r;
  for (int i = 0; i < degree_; ++i) r.c[i] = x.c[i] / pv;
  return r;
}

GrElem GaloisRing::reduce_mod_p_power(const GrElem& x, int v) const noexcept {
  std::int64_t pv = 1;
  for (int i = 0; i < v; ++i) pv *= p_;
  GrElem r;
  for (int i = 0; i < degree_; ++i) r.c[i] = x.c[i] % pv;
  return r;
}

GrElem GaloisRing::residue(const GrElem& x) const noexcept { return reduce_mod_p_power(x, 1); }

GrElem GaloisRing::teichmuller_lift(const GrElem& x) const noexcept {
  GrElem y = x;
  for (;;) {
    GrElem next = pow(y, static_cast<std::uint64_t>(residue_size_));
    if (next == y) return y;
    y = next;
  }
}

std::vector<GrElem> GaloisRing::teichmuller_set() const {
  std::vector<GrElem> out;
  out.reserve(static_cast<std::size_t>(residue_size_));
  GrElem r;
  for (std::int64_t idx = 0; idx < residue_size_; ++idx) {
    std::int64_t v = idx;
    for (int i = degree_ - 1; i >= 0; --i) {
      r.c[i] = v % p_;
      v /= p_;
    }
    out.push_back(teichmuller_lift(r));
  }
  return out;
}

GrElem GaloisRing::teichmuller_generator() const {
  const std::uint64_t order = static_cast<std::uint64_t>(residue_size_) - 1;
  const auto factors = prime_factors(order);
  for (const GrElem& t : teichmuller_set()) {
    if (is_zero(t)) continue;
    bool ok = true;
    for (auto f : factors)
      if (pow(t, order / f) == one()) ok = false;
    if (ok) return t;
  }
  throw std::logic_error("teichmuller_generator: none found");
}

std::uint64_t GaloisRing::index(const GrElem& x) const noexcept {
  std::uint64_t idx = 0;
  for (int i = 0; i < degree_; ++i) idx = idx * static_cast<std::uint64_t>(modulus_) + static_cast<std::uint64_t>(x.c[i]);
  return idx;
}

GrElem GaloisRing::element(std::uint64_t idx) const noexcept {
  GrElem x;
  for (int i = degree_ - 1; i >= 0; --i) {
    x.c[i] = static_cast<std::int64_t>(idx % static_cast<std::uint64_t>(modulus_));
    idx /= static_cast<std::uint64_t>(modulus_);
  }
  return x;
}

std::string GaloisRing::format(const GrElem& x) const {
  if (degree_ == 1) return std::to_string(x.c[0]);
  std::ostringstream os;
  os << '[';
  for (int i = 0; i < degree_; ++i) os << (i ? "," : "") << x.c[i];
  os << ']';
  return os.str();
}

}  // namespace chainacp
