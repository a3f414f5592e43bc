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

#include "chainacp/poly_cyclic.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "chainacp/errors.hpp"

namespace chainacp {

Poly::Poly(std::vector<GrElem> coeffs) : coeffs_(std::move(coeffs)) {
  while (!coeffs_.empty() && coeffs_.back() == GrElem{}) coeffs_.pop_back();
}

Poly Poly::from_ints(const GaloisRing& ring, const std::vector<std::int64_t>& coeffs) {
  std::vector<GrElem> c;
  c.reserve(coeffs.size());
  for (auto v : coeffs) c.push_back(ring.from_int(v));
  return Poly(std::move(c));
}

Poly Poly::monomial(const GaloisRing& ring, int k, const GrElem& c) {
  std::vector<GrElem> v(static_cast<std::size_t>(k) + 1, ring.zero());
  v[k] = c;
  return Poly(std::move(v));
}

Poly Poly::xn_minus_1(const GaloisRing& ring, int n) {
  std::vector<GrElem> v(static_cast<std::size_t>(n) + 1, ring.zero());
  v[0] = ring.neg(ring.one());
  v[n] = ring.add(v[n], ring.one());
  return Poly(std::move(v));
}

namespace poly {

Poly add(const GaloisRing& ring, const Poly& a, const Poly& b) {
  std::vector<GrElem> c(std::max(a.coeffs().size(), b.coeffs().size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = ring.add(a.coeff(static_cast<int>(i)), b.coeff(static_cast<int>(i)));
  return Poly(std::move(c));
}

Poly sub(const GaloisRing& ring, const Poly& a, const Poly& b) {
  std::vector<GrElem> c(std::max(a.coeffs().size(), b.coeffs().size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = ring.sub(a.coeff(static_cast<int>(i)), b.coeff(static_cast<int>(i)));
  return Poly(std::move(c));
}

Poly neg(const GaloisRing& ring, const Poly& a) { return sub(ring, Poly(), a); }

Poly mul(const GaloisRing& ring, const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<GrElem> c(a.coeffs().size() + b.coeffs().size() - 1);
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
    if (ring.is_zero(a.coeffs()[i])) continue;
    for (std::size_t j = 0; j < b.coeffs().size(); ++j)
      c[i + j] = ring.add(c[i + j], ring.mul(a.coeffs()[i], b.coeffs()[j]));
  }
  return Poly(std::move(c));
}

Poly scale(const GaloisRing& ring, const GrElem& c, const Poly& a) {
  std::vector<GrElem> v = a.coeffs();
  for (auto& x : v) x = ring.mul(c, x);
  return Poly(std::move(v));
}

bool is_monic(const GaloisRing& ring, const Poly& a) { return !a.is_zero() && a.leading() == ring.one(); }

std::pair<Poly, Poly> divmod_monic(const GaloisRing& ring, const Poly& a, const Poly& b) {
  if (!is_monic(ring, b)) throw NonMonicDivisor("divmod: divisor " + format(ring, b) + " is not monic");
  const int db = b.degree();
  std::vector<GrElem> r = a.coeffs();
  if (a.degree() < db) return {Poly(), a};
  std::vector<GrElem> q(static_cast<std::size_t>(a.degree() - db) + 1);
  for (int k = a.degree(); k >= db; --k) {
    const GrElem c = r[k];
    if (ring.is_zero(c)) continue;
    q[k - db] = c;
    for (int i = 0; i <= db; ++i) r[k - db + i] = ring.sub(r[k - db + i], ring.mul(c, b.coeffs()[i]));
  }
  return {Poly(std::move(q)), Poly(std::move(r))};
}

Poly rem(const GaloisRing& ring, const Poly& a, const Poly& b) { return divmod_monic(ring, a, b).second; }

Poly exact_div(const GaloisRing& ring, const Poly& a, const Poly& b) {
  auto [q, r] = divmod_monic(ring, a, b);
  if (!r.is_zero()) throw NotADivisor(format(ring, b) + " does not divide " + format(ring, a));
  return q;
}

bool divides(const GaloisRing& ring, const Poly& b, const Poly& a) { return divmod_monic(ring, a, b).second.is_zero(); }

GrElem eval(const GaloisRing& ring, const Poly& a, const GrElem& x) {
  GrElem acc = ring.zero();
  for (int i = a.degree(); i >= 0; --i) acc = ring.add(ring.mul(acc, x), a.coeffs()[i]);
  return acc;
}

Poly reciprocal(const Poly& a) {
  if (a.is_zero()) throw InvalidCode("reciprocal of the zero polynomial");
  std::vector<GrElem> v(a.coeffs().rbegin(), a.coeffs().rend());
  return Poly(std::move(v));
}

Poly monic_reciprocal(const GaloisRing& ring, const Poly& a) {
  if (a.is_zero()) throw InvalidCode("monic_reciprocal of the zero polynomial");
  return scale(ring, ring.inv(a.coeffs().front()), reciprocal(a));
}

Poly reduce_cyclic(const GaloisRing& ring, const Poly& a, int n) {
  std::vector<GrElem> v(static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) v[i % n] = ring.add(v[i % n], a.coeffs()[i]);
  return Poly(std::move(v));
}

Poly change_ring(const GaloisRing& from, const GaloisRing& target, const Poly& a) {
  std::vector<GrElem> v;
  v.reserve(a.coeffs().size());
  for (const auto& c : a.coeffs()) {
    GrElem x = from.residue(c);
    v.push_back(target.from_coeffs(std::span<const std::int64_t>(x.c.data(), static_cast<std::size_t>(target.degree()))));
  }
  return Poly(std::move(v));
}

std::string format(const GaloisRing& ring, const Poly& a) {
  if (ring.degree() != 1) return format_list(ring, a);
  if (a.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = a.degree(); k >= 0; --k) {
    const std::int64_t c = a.coeffs()[k].c[0];
    if (c == 0) continue;
    if (!first) os << '+';
    first = false;
    if (c != 1 || k == 0) os << c;
    if (k >= 1) os << 'x';
    if (k >= 2) os << '^' << k;
  }
  return os.str();
}

std::string format_list(const GaloisRing& ring, const Poly& a) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) os << (i ? "," : "") << ring.format(a.coeffs()[i]);
  os << ']';
  return os.str();
}

}  // namespace poly

namespace word {

CyclicWord from_parts(const ExtensionContext& ctx, int n, const Poly& a, const Poly& b) {
  const GaloisRing& ring = ctx.ring();
  const Poly ra = poly::reduce_cyclic(ring, a, n);
  const Poly rb = poly::reduce_cyclic(ring, b, n);
  CyclicWord w(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) w[i] = SElem{ra.coeff(i), rb.coeff(i)};
  return w;
}

Poly a_part(const CyclicWord& w) {
  std::vector<GrElem> v;
  for (const auto& s : w.coeffs()) v.push_back(s.a);
  return Poly(std::move(v));
}

Poly b_part(const CyclicWord& w) {
  std::vector<GrElem> v;
  for (const auto& s : w.coeffs()) v.push_back(s.b);
  return Poly(std::move(v));
}

namespace {
void check_len(const CyclicWord& u, const CyclicWord& v) {
  if (u.n() != v.n())
    throw LevelMismatch("cyclic words of lengths " + std::to_string(u.n()) + " and " + std::to_string(v.n()));
}
}  // namespace

CyclicWord add(const ExtensionContext& ctx, const CyclicWord& u, const CyclicWord& v) {
  check_len(u, v);
  CyclicWord w(u.n());
  for (std::size_t i = 0; i < u.n(); ++i) w[i] = ctx.s_add(u[i], v[i]);
  return w;
}

CyclicWord sub(const ExtensionContext& ctx, const CyclicWord& u, const CyclicWord& v) {
  check_len(u, v);
  CyclicWord w(u.n());
  for (std::size_t i = 0; i < u.n(); ++i) w[i] = ctx.s_sub(u[i], v[i]);
  return w;
}

CyclicWord scale(const ExtensionContext& ctx, const RElem& r, const CyclicWord& u) {
  CyclicWord w(u.n());
  for (std::size_t i = 0; i < u.n(); ++i) w[i] = ctx.s_scale(r, u[i]);
  return w;
}

CyclicWord scale_s(const ExtensionContext& ctx, const SElem& s, const CyclicWord& u) {
  CyclicWord w(u.n());
  for (std::size_t i = 0; i < u.n(); ++i) w[i] = ctx.s_mul(s, u[i]);
  return w;
}

CyclicWord shift(const CyclicWord& u, std::size_t k) {
  const std::size_t n = u.n();
  CyclicWord w(n);
  if (n == 0) return w;
  for (std::size_t i = 0; i < n; ++i) w[(i + k) % n] = u[i];
  return w;
}

CyclicWord cyclic_mul(const ExtensionContext& ctx, const CyclicWord& u, const CyclicWord& v) {
  check_len(u, v);
  const std::size_t n = u.n();
  CyclicWord w(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) w[(i + j) % n] = ctx.s_add(w[(i + j) % n], ctx.s_mul(u[i], v[j]));
  return w;
}

SElem star(const ExtensionContext& ctx, const CyclicWord& u, const CyclicWord& v) {
  check_len(u, v);
  SElem acc = ctx.s_zero();
  for (std::size_t i = 0; i < u.n(); ++i) acc = ctx.s_add(acc, ctx.s_mul(u[i], v[i]));
  return acc;
}

RElem circledast(const ExtensionContext& ctx, const CyclicWord& u, const CyclicWord& v) {
  return ctx.trace(star(ctx, u, v));
}

CyclicWord sigma(const CyclicWord& u) {
  std::vector<SElem> v(u.coeffs().rbegin(), u.coeffs().rend());
  return CyclicWord(std::move(v));
}

std::size_t weight(const ExtensionContext& ctx, const CyclicWord& u) {
  std::size_t w = 0;
  for (const auto& s : u.coeffs())
    if (s != ctx.s_zero()) ++w;
  return w;
}

bool is_zero(const CyclicWord& u) {
  for (const auto& s : u.coeffs())
    if (s != SElem{}) return false;
  return true;
}

std::vector<RElem> flatten(const CyclicWord& u) {
  std::vector<RElem> v(2 * u.n());
  for (std::size_t i = 0; i < u.n(); ++i) {
    v[i] = u[i].a;
    v[u.n() + i] = u[i].b;
  }
  return v;
}

CyclicWord unflatten(std::span<const RElem> v) {
  const std::size_t n = v.size() / 2;
  CyclicWord w(n);
  for (std::size_t i = 0; i < n; ++i) w[i] = SElem{v[i], v[n + i]};
  return w;
}

std::string format(const ExtensionContext& ctx, const CyclicWord& u) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < u.n(); ++i) os << (i ? ", " : "") << ctx.format(u[i]);
  os << ')';
  return os.str();
}

}  // namespace word

std::vector<std::vector<int>> cyclotomic_cosets(std::int64_t q, int n) {
  if (n < 1) throw std::invalid_argument("cyclotomic_cosets: n must be positive");
  if (std::gcd(q, static_cast<std::int64_t>(n)) != 1)
    throw LengthNotCoprime("gcd(q, n) = gcd(" + std::to_string(q) + ", " + std::to_string(n) + ") != 1");
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  std::vector<std::vector<int>> out;
  for (int start = 0; start < n; ++start) {
    if (seen[start]) continue;
    std::vector<int> coset;
    std::int64_t i = start;
    while (!seen[i]) {
      seen[i] = true;
      coset.push_back(static_cast<int>(i));
      i = (i * q) % n;
    }
    std::sort(coset.begin(), coset.end());
    out.push_back(std::move(coset));
  }
  return out;
}

DivisorSplit divisor_split(const FactorBasis& basis, const Divisor& f, const Divisor& g) {
  const std::uint64_t full = basis.full_mask();
  if ((f.mask & ~full) != 0 || (g.mask & ~full) != 0) throw NotADivisor("divisor_split: foreign divisor");
  const std::uint64_t w = f.mask & g.mask;
  const std::uint64_t f1 = f.mask & ~w;
  const std::uint64_t g1 = g.mask & ~w;
  const std::uint64_t ell = full & ~(w | f1 | g1);
  return {basis.divisor(w), basis.divisor(f1), basis.divisor(g1), basis.divisor(ell)};
}

}  // namespace chainacp
