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

#include "chainacp/trace_duality.hpp"

#include <string>

#include "chainacp/errors.hpp"

namespace chainacp {

ChainMat trace_gram(const ExtensionContext& ctx, int n) {
  const GaloisRing& ring = ctx.ring();
  const auto nn = static_cast<std::size_t>(n);
  ChainMat g(ring, 2 * nn, 2 * nn);
  const GrElem two = ring.from_int(2);
  for (std::size_t i = 0; i < nn; ++i) {
    g.at(i, i) = two;
    g.at(nn + i, nn + i) = ring.mul(two, ctx.theta());
  }
  return g;
}

RawModule trace_dual(const RawModule& m) {
  const FactorBasisPtr& basis = m.basis();
  const GaloisRing& ring = basis->ring();
  const auto cols = static_cast<std::size_t>(2 * basis->n());
  if (m.is_zero()) return RawModule::from_rows(basis, ChainMat::identity(ring, cols));
  // u is orthogonal to every row of H iff u (H Gamma)^T = 0.
  const ChainMat hg = m.howell().multiply(trace_gram(*basis->context(), basis->n()));
  return RawModule::from_rows(basis, row_kernel(hg.transpose()));
}

AdditiveCyclicCode trace_dual(const AdditiveCyclicCode& c) { return AdditiveCyclicCode::from_module(trace_dual(c.raw())); }

AdditiveCyclicCode closed_form_dual(const AdditiveCyclicCode& c) {
  if (!c.twist().is_zero()) throw ClosedFormInapplicable("closed-form dual needs r = 0, got " + c.describe());
  const FactorBasis& b = *c.basis();
  return AdditiveCyclicCode::make(c.basis(), b.reciprocal(b.complement(c.f())), Poly{},
                                  b.reciprocal(b.complement(c.g())));
}

const char* to_string(DualCondition c) noexcept {
  switch (c) {
    case DualCondition::E1: return "E1";
    case DualCondition::E2: return "E2";
    case DualCondition::E3: return "E3";
    case DualCondition::E4: return "E4";
    case DualCondition::R1: return "R1";
    case DualCondition::R2: return "R2";
    case DualCondition::R3: return "R3";
    case DualCondition::Lstar: return "Lstar";
    case DualCondition::E1res: return "E1res";
    case DualCondition::Deg: return "Deg";
  }
  return "?";
}

namespace {

// All n cyclic shifts of a as coefficient vectors.
std::vector<std::vector<GrElem>> shifts(const GaloisRing& ring, const Poly& a, int n) {
  const Poly base = poly::reduce_cyclic(ring, a, n);
  std::vector<std::vector<GrElem>> out(static_cast<std::size_t>(n), std::vector<GrElem>(static_cast<std::size_t>(n)));
  for (int s = 0; s < n; ++s)
    for (int k = 0; k <= base.degree(); ++k) out[static_cast<std::size_t>(s)][static_cast<std::size_t>((k + s) % n)] = base.coeff(k);
  return out;
}

GrElem star(const GaloisRing& ring, const std::vector<GrElem>& u, const std::vector<GrElem>& v) {
  GrElem acc = ring.zero();
  for (std::size_t i = 0; i < u.size(); ++i) acc = ring.add(acc, ring.mul(u[i], v[i]));
  return acc;
}

Poly rec_or_zero(const Poly& a) { return a.is_zero() ? Poly{} : poly::reciprocal(a); }

}  // namespace

DualReport check_dual_pair(const AdditiveCyclicCode& c, const AdditiveCyclicCode& d) {
  if (c.n() != d.n() || !(c.ctx() == d.ctx())) throw LevelMismatch("check_dual_pair: codes live in different spaces");
  const GaloisRing& ring = c.ring();
  const FactorBasis& b = *c.basis();
  const int n = c.n();
  const RElem theta = c.ctx().theta();
  DualReport rep;
  auto fail = [&](DualCondition k) {
    for (auto x : rep.failed)
      if (x == k) return;
    rep.failed.push_back(k);
  };

  const auto fs = shifts(ring, c.f().poly, n);
  const auto rs = shifts(ring, c.twist(), n);
  const auto gs = shifts(ring, c.g().poly, n);
  const auto fds = shifts(ring, d.f().poly, n);
  const auto rds = shifts(ring, d.twist(), n);
  const auto gds = shifts(ring, d.g().poly, n);
  const auto nn = static_cast<std::size_t>(n);

  auto check_e = [&](DualCondition k, auto&& value) {
    for (std::size_t i = 0; i < nn; ++i)
      for (std::size_t j = 0; j < nn; ++j)
        if (!ring.is_zero(value(i, j))) {
          fail(k);
          if (!rep.witness) rep.witness = std::make_pair(static_cast<int>(i), static_cast<int>(j));
          return;
        }
  };
  // x^i f * x^j f' + theta (x^i f r * x^j f' r') = 0.
  auto e1 = [&](std::size_t i, std::size_t j) {
    return ring.add(star(ring, fs[i], fds[j]), ring.mul(theta, star(ring, rs[i], rds[j])));
  };
  check_e(DualCondition::E1, e1);
  check_e(DualCondition::E2, [&](std::size_t i, std::size_t j) { return star(ring, gs[i], rds[j]); });
  check_e(DualCondition::E3, [&](std::size_t i, std::size_t j) { return star(ring, rs[i], gds[j]); });
  check_e(DualCondition::E4, [&](std::size_t i, std::size_t j) { return star(ring, gs[i], gds[j]); });
  for (std::size_t i = 0; i < nn; ++i)
    if (!ring.is_zero(e1(i, 0))) fail(DualCondition::E1res);

  const DivisorSplit s = divisor_split(b, c.f(), c.g());
  const DivisorSplit sd = divisor_split(b, d.f(), d.g());
  rep.notes.emplace_back("primed split w', f1', g1', ell' derived from gcd(f', g')");
  const auto r = c.r();
  const auto rd = d.r();
  auto rec = [&](const Divisor& x) { return b.reciprocal(x).poly; };
  auto divides = [&](const Poly& x, const Poly& y) { return poly::divides(ring, x, y); };
  auto mul = [&](const Poly& x, const Poly& y) { return poly::mul(ring, x, y); };
  const Poly f1l = mul(rec(s.f1), rec(s.ell));   // f1* ell*
  const Poly g1l = mul(rec(s.g1), rec(s.ell));   // g1* ell*
  const Poly g1ld = mul(sd.g1.poly, sd.ell.poly);  // g1' ell'
  const Poly f1ld = mul(sd.f1.poly, sd.ell.poly);  // f1' ell'
  const Poly gstar = rec(c.g());
  const Poly fstar = rec(c.f());

  if (rd) {
    if (!divides(f1l, mul(d.f().poly, *rd)) || !divides(g1ld, mul(gstar, *rd))) fail(DualCondition::R1);
  } else {
    rep.notes.emplace_back("r' undefined (f' does not divide the twist); R1 skipped");
  }
  if (r) {
    const Poly rstar = rec_or_zero(*r);
    if (!divides(g1l, mul(d.g().poly, rstar)) || !divides(f1ld, mul(fstar, rstar))) fail(DualCondition::R2);
  } else {
    rep.notes.emplace_back("r undefined (f does not divide the twist); R2 skipped");
  }
  if (!divides(f1l, d.g().poly) || !divides(f1ld, gstar)) fail(DualCondition::R3);
  if (!divides(rec(s.ell), d.f().poly)) fail(DualCondition::Lstar);
  if (c.f().degree() + d.f().degree() + c.g().degree() + d.g().degree() != 2 * n) fail(DualCondition::Deg);

  rep.verdict = rep.failed.empty();
  return rep;
}

bool lemma_xn1_equiv(const GaloisRing& ring, const Poly& a, const Poly& b, int n) {
  if (a.degree() > n - 1 || b.degree() > n - 1) throw ShapeError("lemma_xn1_equiv: degree must be at most n - 1");
  return poly::divides(ring, Poly::xn_minus_1(ring, n), poly::mul(ring, a, b));
}

LatticeLaws dual_lattice_laws(const RawModule& c, const RawModule& d) {
  if (c.n() != d.n()) throw LevelMismatch("dual_lattice_laws: lengths differ");
  const RawModule cd = trace_dual(c);
  const RawModule dd = trace_dual(d);
  LatticeLaws out;
  out.sum_law = trace_dual(c.sum(d)) == cd.intersect(dd);
  out.intersection_law = cd.sum(dd) == trace_dual(c.intersect(d));
  return out;
}

}  // namespace chainacp
