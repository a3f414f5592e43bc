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

#include <gtest/gtest.h>

#include <random>
#include <set>

#include "chainacp/errors.hpp"
#include "chainacp/poly_cyclic.hpp"
#include "test_util.hpp"

namespace chainacp {
namespace {

using testing::P;
using testing::S;
using testing::W;

TEST(Poly, Arithmetic) {
  const auto ctx = testing::z9();
  const GaloisRing& r = ctx->ring();
  EXPECT_EQ(poly::mul(r, P(r, {1, 1}), P(r, {8, 1})), P(r, {8, 0, 1}));
  const auto [q, rem] = poly::divmod_monic(r, Poly::xn_minus_1(r, 8), P(r, {8, 1}));
  EXPECT_EQ(q.degree(), 7);
  EXPECT_TRUE(rem.is_zero());
  EXPECT_EQ(poly::eval(r, P(r, {3, 1, 1}), r.one()), r.from_int(5));
  EXPECT_EQ(poly::reciprocal(P(r, {3, 1, 1})), P(r, {1, 1, 3}));
  EXPECT_EQ(poly::monic_reciprocal(r, P(r, {8, 1})), P(r, {8, 1}));
  const Poly a = P(r, {4, 0, 7, 2});
  EXPECT_EQ(poly::reciprocal(poly::reciprocal(a)), a);
  EXPECT_EQ(poly::format(r, P(r, {8, 4, 1})), "x^2+4x+8");
}

TEST(CyclicWord, Products) {
  const auto ctx = testing::z9();
  const ExtensionContext& c = *ctx;
  const CyclicWord x = W(c, {{0, 0}, {1, 0}});
  const CyclicWord one = W(c, {{1, 0}, {0, 0}});
  EXPECT_EQ(word::cyclic_mul(c, x, x), one);
  const CyclicWord u = W(c, {{1, 0}, {0, 1}});  // 1 + a x
  const CyclicWord v = W(c, {{1, 0}, {0, 8}});  // 1 - a x
  EXPECT_EQ(word::cyclic_mul(c, u, v), W(c, {{2, 0}, {0, 0}}));
  EXPECT_EQ(word::cyclic_mul(c, u, one), u);
  const CyclicWord w = W(c, {{0, 1}, {1, 0}});  // a + x
  EXPECT_EQ(word::star(c, u, w), S(c, 0, 2));
  EXPECT_EQ(word::star(c, u, CyclicWord(2)), c.s_zero());
  EXPECT_EQ(word::circledast(c, u, w), c.ring().zero());
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      CyclicWord a(4), b(4);
      a[i] = c.s_one();
      b[j] = c.s_one();
      EXPECT_EQ(word::star(c, a, b), i == j ? c.s_one() : c.s_zero());
    }
  EXPECT_EQ(word::shift(word::shift(u)), u);
}

TEST(CyclicWord, TraceFormIdentity) {
  const auto ctx = testing::z9();
  const ExtensionContext& c = *ctx;
  const GaloisRing& r = c.ring();
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::uint64_t> d(0, c.s_size() - 1);
  for (int n : {2, 4, 8}) {
    for (int k = 0; k < 1000; ++k) {
      CyclicWord u(n), v(n);
      for (int i = 0; i < n; ++i) {
        u[i] = c.s_element(d(rng));
        v[i] = c.s_element(d(rng));
      }
      const RElem lhs = word::circledast(c, u, v);
      EXPECT_EQ(lhs, word::circledast(c, v, u));
      // 2 (a . a' + theta b . b') from the R-parts.
      RElem aa = r.zero(), bb = r.zero();
      for (int i = 0; i < n; ++i) {
        aa = r.add(aa, r.mul(u[i].a, v[i].a));
        bb = r.add(bb, r.mul(u[i].b, v[i].b));
      }
      EXPECT_EQ(lhs, r.scale(r.add(aa, r.mul(c.theta(), bb)), 2));
    }
  }
}

TEST(Factor, Cosets) {
  EXPECT_EQ(cyclotomic_cosets(3, 8), (std::vector<std::vector<int>>{{0}, {1, 3}, {2, 6}, {4}, {5, 7}}));
  EXPECT_EQ(cyclotomic_cosets(9, 1), (std::vector<std::vector<int>>{{0}}));
  // Orbit computation by repeated multiplication.
  for (int n : {5, 7, 10, 13, 16}) {
    const auto cs = cyclotomic_cosets(3, n);
    std::size_t total = 0;
    for (const auto& c : cs) {
      total += c.size();
      for (int i : c) EXPECT_NE(std::find(c.begin(), c.end(), (3 * i) % n), c.end());
    }
    EXPECT_EQ(total, static_cast<std::size_t>(n));
  }
}

TEST(Factor, XEightMinusOne) {
  const auto b = testing::basis(testing::z9(), 8);
  const GaloisRing& r = b->ring();
  const std::set<Poly> want{P(r, {8, 1}), P(r, {1, 1}), P(r, {1, 0, 1}), P(r, {8, 4, 1}), P(r, {8, 5, 1})};
  EXPECT_EQ(std::set<Poly>(b->factors().begin(), b->factors().end()), want);
  const GaloisRing& f3 = b->residue_basis()->ring();
  const auto res = b->residue_factors();
  const std::set<Poly> want_res{P(f3, {2, 1}), P(f3, {1, 1}), P(f3, {1, 0, 1}), P(f3, {2, 1, 1}), P(f3, {2, 2, 1})};
  EXPECT_EQ(std::set<Poly>(res.begin(), res.end()), want_res);
  Poly prod = P(r, {1});
  for (const auto& f : b->factors()) prod = poly::mul(r, prod, f);
  EXPECT_EQ(prod, Poly::xn_minus_1(r, 8));
  EXPECT_THROW(testing::basis(testing::z9(), 3), LengthNotCoprime);
}

TEST(Factor, OtherContexts) {
  for (auto [p, e, m, n] : {std::tuple{3, 2, 2, 8}, std::tuple{5, 2, 1, 6}, std::tuple{3, 3, 1, 10}, std::tuple{7, 1, 1, 9}}) {
    const auto b = FactorBasis::build(ExtensionContext::build(p, e, m), n);
    const GaloisRing& r = b->ring();
    Poly prod = P(r, {1});
    for (const auto& f : b->factors()) {
      EXPECT_TRUE(poly::is_monic(r, f));
      prod = poly::mul(r, prod, f);
    }
    EXPECT_EQ(prod, Poly::xn_minus_1(r, n));
    EXPECT_EQ(b->count(), cyclotomic_cosets(r.residue_size(), n).size());
  }
}

TEST(Factor, DivisorLattice) {
  const auto b = testing::basis(testing::z9(), 8);
  const GaloisRing& r = b->ring();
  EXPECT_EQ(b->all_divisors().size(), 32u);
  EXPECT_EQ(b->one().poly, P(r, {1}));
  EXPECT_EQ(b->full().poly, Poly::xn_minus_1(r, 8));
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<std::uint64_t> d(0, b->full_mask());
  for (int k = 0; k < 50; ++k) {
    const Divisor f = b->divisor(d(rng));
    const Divisor g = b->divisor(d(rng));
    const Divisor h = b->gcd(f, g);
    EXPECT_TRUE(poly::divides(r, h.poly, f.poly));
    EXPECT_TRUE(poly::divides(r, h.poly, g.poly));
    // Maximality: no larger common divisor.
    for (const auto& c : b->all_divisors())
      if (poly::divides(r, c.poly, f.poly) && poly::divides(r, c.poly, g.poly)) {
        EXPECT_LE(c.degree(), h.degree());
      }
    EXPECT_EQ(b->identify(f.poly)->mask, f.mask);
  }
  EXPECT_THROW(b->require_divisor(P(r, {1, 0, 0, 1})), NotADivisor);
}

TEST(Factor, DivisorSplit) {
  const auto b = testing::basis(testing::z9(), 8);
  const GaloisRing& r = b->ring();
  const Divisor f = b->require_divisor(poly::mul(r, P(r, {8, 1}), P(r, {1, 1})));
  const Divisor g = b->require_divisor(poly::mul(r, poly::mul(r, P(r, {8, 1}), P(r, {1, 0, 1})), P(r, {8, 4, 1})));
  const DivisorSplit s = divisor_split(*b, f, g);
  EXPECT_EQ(s.w.poly, P(r, {8, 1}));
  EXPECT_EQ(s.f1.poly, P(r, {1, 1}));
  EXPECT_EQ(s.g1.poly, poly::mul(r, P(r, {1, 0, 1}), P(r, {8, 4, 1})));
  EXPECT_EQ(s.ell.poly, P(r, {8, 5, 1}));
  for (const auto& x : b->all_divisors())
    for (const auto& y : b->all_divisors()) {
      const DivisorSplit t = divisor_split(*b, x, y);
      EXPECT_EQ(poly::mul(r, poly::mul(r, t.w.poly, t.f1.poly), poly::mul(r, t.g1.poly, t.ell.poly)), b->full().poly);
    }
  const DivisorSplit same = divisor_split(*b, f, f);
  EXPECT_EQ(same.f1.poly, P(r, {1}));
  EXPECT_EQ(same.ell.poly, b->complement(f).poly);
}

}  // namespace
}  // namespace chainacp
