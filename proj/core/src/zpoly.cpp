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

#include "zpoly.hpp"

#include <stdexcept>

#include "chainacp/galois_ring.hpp"

namespace chainacp::zpoly {

namespace {

std::int64_t md(std::int64_t v, std::int64_t mod) {
  v %= mod;
  return v < 0 ? v + mod : v;
}

std::int64_t ipow(std::int64_t b, int k) {
  std::int64_t r = 1;
  while (k-- > 0) r *= b;
  return r;
}

}  // namespace

void trim(ZPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int degree(const ZPoly& a) {
  ZPoly t = a;
  trim(t);
  return static_cast<int>(t.size()) - 1;
}

ZPoly reduce(ZPoly a, std::int64_t mod) {
  for (auto& c : a) c = md(c, mod);
  trim(a);
  return a;
}

ZPoly add(const ZPoly& a, const ZPoly& b, std::int64_t mod) {
  ZPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  return reduce(std::move(r), mod);
}

ZPoly sub(const ZPoly& a, const ZPoly& b, std::int64_t mod) {
  ZPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  return reduce(std::move(r), mod);
}

ZPoly mul(const ZPoly& a, const ZPoly& b, std::int64_t mod) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = md(r[i + j] + md(a[i], mod) * md(b[j], mod), mod);
  }
  return reduce(std::move(r), mod);
}

ZPoly scale(const ZPoly& a, std::int64_t k, std::int64_t mod) {
  ZPoly r = a;
  for (auto& c : r) c = md(md(c, mod) * md(k, mod), mod);
  return reduce(std::move(r), mod);
}

std::int64_t inv_mod(std::int64_t a, std::int64_t mod) {
  std::int64_t g = mod, x = 0, x1 = 1, a1 = md(a, mod);
  while (a1 != 0) {
    std::int64_t q = g / a1;
    std::int64_t t = g - q * a1;
    g = a1;
    a1 = t;
    t = x - q * x1;
    x = x1;
    x1 = t;
  }
  if (g != 1) throw std::domain_error("inv_mod: not invertible");
  return md(x, mod);
}

void divmod(const ZPoly& a, const ZPoly& b, std::int64_t mod, ZPoly& quot, ZPoly& rem) {
  ZPoly bb = reduce(b, mod);
  if (bb.empty()) throw std::domain_error("divmod: division by zero polynomial");
  rem = reduce(a, mod);
  const int db = static_cast<int>(bb.size()) - 1;
  const std::int64_t lead_inv = inv_mod(bb.back(), mod);
  quot.assign(rem.size() > bb.size() - 1 ? rem.size() - bb.size() + 1 : 0, 0);
  for (int k = static_cast<int>(rem.size()) - 1; k >= db; --k) {
    const std::int64_t c = md(rem[k] * lead_inv, mod);
    if (c == 0) continue;
    quot[k - db] = c;
    for (int i = 0; i <= db; ++i) rem[k - db + i] = md(rem[k - db + i] - c * bb[i], mod);
  }
  trim(quot);
  trim(rem);
}

ZPoly mulmod(const ZPoly& a, const ZPoly& b, const ZPoly& m, std::int64_t mod) {
  ZPoly q, r;
  divmod(mul(a, b, mod), m, mod, q, r);
  return r;
}

ZPoly powmod(ZPoly base, std::uint64_t k, const ZPoly& m, std::int64_t mod) {
  ZPoly result{1}, q;
  divmod(base, m, mod, q, base);
  while (k > 0) {
    if (k & 1U) result = mulmod(result, base, m, mod);
    base = mulmod(base, base, m, mod);
    k >>= 1U;
  }
  return result;
}

void ext_gcd_field(const ZPoly& a, const ZPoly& b, std::int64_t p, ZPoly& s, ZPoly& t) {
  ZPoly r0 = reduce(a, p), r1 = reduce(b, p);
  ZPoly s0{1}, s1{}, t0{}, t1{1};
  while (!r1.empty()) {
    ZPoly q, r;
    divmod(r0, r1, p, q, r);
    ZPoly s2 = sub(s0, mul(q, s1, p), p);
    ZPoly t2 = sub(t0, mul(q, t1, p), p);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.size() != 1) throw std::domain_error("ext_gcd_field: polynomials are not coprime");
  const std::int64_t g = inv_mod(r0[0], p);
  s = scale(s0, g, p);
  t = scale(t0, g, p);
}

ZPoly smallest_primitive(std::int64_t p, int degree) {
  if (degree == 1) {
    // x - g for the smallest primitive root g, written with the constant term first.
    const auto factors = prime_factors(static_cast<std::uint64_t>(p - 1));
    for (std::int64_t c = 0; c < p; ++c) {
      const std::int64_t root = md(-c, p);
      if (root == 0) continue;
      bool primitive = true;
      for (auto f : factors) {
        std::int64_t acc = 1;
        for (std::uint64_t i = 0; i < static_cast<std::uint64_t>(p - 1) / f; ++i) acc = acc * root % p;
        if (acc == 1) primitive = false;
      }
      if (primitive) return {c, 1};
    }
    throw std::logic_error("no primitive root");
  }
  const std::uint64_t order = static_cast<std::uint64_t>(ipow(p, degree)) - 1;
  const auto factors = prime_factors(order);
  ZPoly cand(degree + 1, 0);
  cand[degree] = 1;
  const std::int64_t total = ipow(p, degree);
  for (std::int64_t idx = 0; idx < total; ++idx) {
    std::int64_t v = idx;
    for (int i = 0; i < degree; ++i) {
      cand[i] = v % p;
      v /= p;
    }
    if (cand[0] == 0) continue;
    const ZPoly x{0, 1};
    if (powmod(x, order, cand, p) != ZPoly{1}) continue;
    bool primitive = true;
    for (auto f : factors) {
      if (powmod(x, order / f, cand, p) == ZPoly{1}) {
        primitive = false;
        break;
      }
    }
    if (primitive) return cand;
  }
  throw std::logic_error("no primitive polynomial found");
}

ZPoly hensel_lift_factor(const ZPoly& target, const ZPoly& factor_mod_p, std::int64_t p, int e) {
  ZPoly h = reduce(factor_mod_p, p);
  ZPoly g, rem;
  divmod(reduce(target, p), h, p, g, rem);
  if (!rem.empty()) throw std::domain_error("hensel_lift_factor: not a factor mod p");
  ZPoly s, t;
  ext_gcd_field(g, h, p, s, t);  // s*g + t*h = 1 mod p
  std::int64_t pk = p;
  for (int k = 1; k < e; ++k) {
    const std::int64_t next = pk * p;
    // target - h*g = pk * E
    ZPoly diff = sub(reduce(target, next), mul(h, g, next), next);
    ZPoly err(diff.size(), 0);
    for (std::size_t i = 0; i < diff.size(); ++i) err[i] = md(diff[i] / pk, p);
    trim(err);
    ZPoly q, a, b, r2;
    divmod(mul(err, s, p), h, p, q, a);  // a*g = err mod h
    divmod(sub(err, mul(a, g, p), p), h, p, b, r2);
    if (!r2.empty()) throw std::logic_error("hensel_lift_factor: inexact division");
    h = add(h, scale(a, pk, next), next);
    g = add(g, scale(b, pk, next), next);
    pk = next;
  }
  return h;
}

}  // namespace chainacp::zpoly
