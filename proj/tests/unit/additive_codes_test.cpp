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

#include <cmath>
#include <random>

#include "chainacp/errors.hpp"
#include "chainacp/oracle.hpp"
#include "test_util.hpp"

namespace chainacp {
namespace {

using testing::P;
using testing::W;

AdditiveCyclicCode code(const FactorBasisPtr& b, std::vector<std::int64_t> f, std::vector<std::int64_t> r,
                        std::vector<std::int64_t> g) {
  const GaloisRing& ring = b->ring();
  return AdditiveCyclicCode::make(b, b->require_divisor(P(ring, f)), P(ring, r), b->require_divisor(P(ring, g)));
}

TEST(Code, Ranks) {
  const auto b8 = testing::basis(testing::z9(), 8);
  const GaloisRing& r = b8->ring();
  const Poly f = poly::mul(r, P(r, {8, 1}), P(r, {1, 1}));
  const Poly g = poly::mul(r, poly::mul(r, P(r, {8, 1}), P(r, {8, 4, 1})), P(r, {1, 0, 1}));
  const auto c = AdditiveCyclicCode::make(b8, b8->require_divisor(f), P(r, {3, 1, 1}), b8->require_divisor(g));
  EXPECT_EQ(c.rank(), 9);
  EXPECT_EQ(c.log_cardinality(), 18u);
  EXPECT_EQ(rank_profile(c.generator_matrix()).free_rank, 9u);
  for (int n : {2, 4}) {
    const auto b = testing::basis(testing::z9(), n);
    EXPECT_EQ(AdditiveCyclicCode::make(b, b->one(), Poly{}, b->one()).rank(), 2 * n);
    EXPECT_EQ(AdditiveCyclicCode::make(b, b->full(), Poly{}, b->full()).rank(), 0);
  }
  EXPECT_THROW(code(testing::basis(testing::z9(), 2), {1}, {0, 0, 1}, {8, 0, 1}), InvalidCode);
}

TEST(Code, FromGenerators) {
  const auto ctx = testing::z9();
  const auto b8 = testing::basis(ctx, 8);
  CyclicWord w(8);
  w[0] = ctx->s_one();
  w[1] = ctx->mu();
  const auto c = AdditiveCyclicCode::from_generators(b8, {w});
  EXPECT_EQ(c, code(b8, {1}, {0, 1}, {8, 0, 0, 0, 0, 0, 0, 0, 1}));
  const auto b2 = testing::basis(ctx, 2);
  const auto m = AdditiveCyclicCode::from_generators(b2, {W(*ctx, {{0, 1}, {0, 0}})});
  EXPECT_EQ(m, code(b2, {8, 0, 1}, {}, {1}));
  EXPECT_THROW(AdditiveCyclicCode::from_generators(b2, {W(*ctx, {{3, 0}, {0, 0}})}), NotFree);
}

TEST(Code, RoundTrip) {
  std::mt19937_64 rng(21);
  for (int n : {2, 4}) {
    const auto b = testing::basis(testing::z9(), n);
    const auto all = canonical_codes(b, true, kDefaultBudget);
    for (int k = 0; k < 10; ++k) {
      const auto& c = all[std::uniform_int_distribution<std::size_t>(0, all.size() - 1)(rng)];
      const auto words = c.enumerate(kDefaultBudget);
      EXPECT_EQ(words.size(), static_cast<std::size_t>(std::pow(9, c.rank())));
      EXPECT_EQ(AdditiveCyclicCode::from_generators(b, words), c) << c.describe();
      for (const auto& w : words) {
        EXPECT_TRUE(c.contains(w));
        EXPECT_TRUE(c.contains(word::shift(w)));
      }
    }
  }
}

TEST(Code, Membership) {
  const auto ctx = testing::z9();
  const auto b = testing::basis(ctx, 2);
  const auto c = code(b, {1, 1}, {}, {8, 1});
  const oracle::WordSet in(ctx, 2, c.enumerate(kDefaultBudget));
  std::size_t outside = 0;
  for (std::uint64_t i = 0; i < ctx->s_size(); ++i)
    for (std::uint64_t j = 0; j < ctx->s_size(); ++j) {
      const CyclicWord w(std::vector<SElem>{ctx->s_element(i), ctx->s_element(j)});
      EXPECT_EQ(c.contains(w), in.contains(w));
      outside += !in.contains(w);
    }
  EXPECT_EQ(outside, 6561u - in.size());
  EXPECT_EQ(code(b, {8, 0, 1}, {}, {1}).enumerate(kDefaultBudget).size(), 81u);
  EXPECT_EQ(code(b, {8, 0, 1}, {}, {8, 0, 1}).enumerate(kDefaultBudget).size(), 1u);
  EXPECT_THROW(code(b, {1}, {}, {1}).enumerate(10), BudgetExceeded);
}

TEST(Code, Twist) {
  const auto b = testing::basis(testing::z9(), 2);
  const GaloisRing& r = b->ring();
  const auto c = AdditiveCyclicCode::make_twisted(b, b->require_divisor(P(r, {1, 1})), P(r, {1}), b->require_divisor(P(r, {8, 1})));
  EXPECT_FALSE(c.r().has_value());
  EXPECT_FALSE(c.f_divides_twist());
  EXPECT_EQ(c.rank(), 2);
  const auto d = code(b, {1}, {3}, {8, 1});
  ASSERT_TRUE(d.r().has_value());
  EXPECT_EQ(*d.r(), P(r, {3}));
}

TEST(Code, Projection) {
  const auto b = testing::basis(testing::z9(), 2);
  const auto c = code(b, {1, 1}, {}, {8, 1});
  const auto pc = c.project();
  const GaloisRing& f3 = pc.ring();
  EXPECT_EQ(f3.modulus(), 3);
  EXPECT_EQ(pc.f().poly, P(f3, {1, 1}));
  EXPECT_EQ(pc.g().poly, P(f3, {2, 1}));
  const auto full = code(b, {1}, {}, {1}).project();
  EXPECT_EQ(full.rank(), 4);
  std::mt19937_64 rng(9);
  const auto all = canonical_codes(testing::basis(testing::z9(), 4), true, kDefaultBudget);
  for (int k = 0; k < 20; ++k) {
    const auto& x = all[std::uniform_int_distribution<std::size_t>(0, all.size() - 1)(rng)];
    EXPECT_EQ(x.project().rank(), x.rank());
    EXPECT_EQ(rank_profile(x.generator_matrix().residue()).free_rank, static_cast<std::size_t>(x.rank()));
  }
}

TEST(Code, Sigma) {
  const auto ctx = testing::z9();
  const auto b = testing::basis(ctx, 2);
  for (const auto& c : canonical_codes(b, true, kDefaultBudget)) EXPECT_EQ(c.sigma().sigma(), c);
  const auto c = code(b, {1, 1}, {}, {8, 1});
  std::vector<CyclicWord> reversed;
  for (const auto& w : c.enumerate(kDefaultBudget)) reversed.push_back(word::sigma(w));
  EXPECT_EQ(oracle::WordSet(ctx, 2, c.sigma().enumerate(kDefaultBudget)), oracle::WordSet(ctx, 2, reversed));
  const auto zero = code(b, {8, 0, 1}, {}, {8, 0, 1});
  EXPECT_EQ(zero.sigma(), zero);
}

TEST(Code, MinDistance) {
  const auto b = testing::basis(testing::z9(), 2);
  EXPECT_EQ(min_distance(code(b, {8, 0, 1}, {}, {1, 1}), kDefaultBudget), 2u);
  EXPECT_EQ(min_distance(code(b, {1}, {}, {1}), kDefaultBudget), 1u);
  for (const auto& c : canonical_codes(b, true, kDefaultBudget)) {
    if (c.rank() == 0) continue;
    EXPECT_EQ(min_distance(c, kDefaultBudget), min_distance(c.sigma(), kDefaultBudget));
  }
}

TEST(Code, CanonicalCount) {
  EXPECT_EQ(canonical_codes(testing::basis(testing::z9(), 2), true, kDefaultBudget).size(), 128u);
  EXPECT_EQ(canonical_codes(testing::basis(testing::z9(), 8), false, kDefaultBudget).size(), 1024u);
}

}  // namespace
}  // namespace chainacp
