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

#include "chainacp/additive_codes.hpp"
#include "chainacp/chain_linalg.hpp"
#include "test_util.hpp"

namespace chainacp {
namespace {

using testing::span_of;

const GaloisRing& z9() {
  static const GaloisRing r(3, 2, 1);
  return r;
}

bool in_span(const std::vector<std::vector<GrElem>>& span, const std::vector<GrElem>& v) {
  return std::binary_search(span.begin(), span.end(), v);
}

TEST(Howell, SmallCases) {
  const GaloisRing& r = z9();
  const ChainMat id = ChainMat::identity(r, 3);
  EXPECT_EQ(howell_form(id), id);
  const ChainMat m = ChainMat::from_ints(r, {{3, 0}, {0, 1}});
  EXPECT_EQ(howell_form(m), m);
  const RankProfile p = rank_profile(ChainMat::from_ints(r, {{3}}));
  EXPECT_EQ(p.free_rank, 0u);
  EXPECT_EQ(p.pivot_vals, std::vector<int>{1});
  EXPECT_EQ(p.log_cardinality, 1u);
  const RankProfile q = rank_profile(id);
  EXPECT_EQ(q.free_rank, 3u);
  EXPECT_TRUE(q.is_free());
}

TEST(Howell, RandomSpanAndTransform) {
  const GaloisRing& r = z9();
  std::mt19937_64 rng(1);
  for (int k = 0; k < 40; ++k) {
    const ChainMat m = testing::random_mat(r, 3, 4, rng);
    const HowellResult h = howell(m);
    EXPECT_EQ(span_of(h.form), span_of(m));
    EXPECT_EQ(h.transform.multiply(m), h.form);
    EXPECT_EQ(howell_form(h.form), h.form);
    // Canonical: any generating set of the same module gives the same form.
    const ChainMat shuffled = testing::random_mat(r, 2, 3, rng).multiply(m).vstack(m);
    EXPECT_EQ(howell_form(shuffled), h.form);
    for (const auto& v : span_of(m)) EXPECT_TRUE(howell_contains(h.form, v));
  }
}

TEST(RowKernel, Cases) {
  const GaloisRing& r = z9();
  const ChainMat k = row_kernel(ChainMat::from_ints(r, {{3}}));
  EXPECT_EQ(howell_form(k), ChainMat::from_ints(r, {{3}}));
  EXPECT_EQ(row_kernel(ChainMat::from_ints(r, {{1, 2}, {0, 8}})).rows(), 0u);
  std::mt19937_64 rng(2);
  for (int t = 0; t < 40; ++t) {
    const ChainMat m = testing::random_mat(r, 2, 3, rng);
    const auto kspan = span_of(row_kernel(m));
    for (std::uint64_t a = 0; a < 9; ++a)
      for (std::uint64_t b = 0; b < 9; ++b) {
        const std::vector<GrElem> x{r.element(a), r.element(b)};
        bool zero = true;
        for (std::size_t j = 0; j < 3; ++j)
          if (!r.is_zero(r.add(r.mul(x[0], m.at(0, j)), r.mul(x[1], m.at(1, j))))) zero = false;
        EXPECT_EQ(zero, in_span(kspan, x));
      }
  }
}

TEST(Invertible, Cases) {
  const GaloisRing& r = z9();
  EXPECT_TRUE(is_invertible(ChainMat::from_ints(r, {{2, 0}, {0, 7}})));
  EXPECT_FALSE(is_invertible(ChainMat::from_ints(r, {{3}})));
  std::mt19937_64 rng(3);
  const ChainMat id = ChainMat::identity(r, 2);
  for (int t = 0; t < 30; ++t) {
    const ChainMat m = testing::random_mat(r, 2, 2, rng);
    bool found = false;
    for (std::uint64_t c = 0; c < 6561 && !found; ++c) {
      const ChainMat y = ChainMat::from_ints(r, {{std::int64_t(c % 9), std::int64_t(c / 9 % 9)},
                                                 {std::int64_t(c / 81 % 9), std::int64_t(c / 729)}});
      found = m.multiply(y) == id;
    }
    EXPECT_EQ(is_invertible(m), found);
  }
  // 4x4: a unimodular product is invertible; scaling a row by 3 is not.
  for (int t = 0; t < 10; ++t) {
    const ChainMat u = ChainMat::identity(r, 4);
    const ChainMat a = testing::random_mat(r, 4, 4, rng);
    if (is_invertible(a)) {
      EXPECT_TRUE(is_invertible(a.multiply(u)));
      const ChainMat three = ChainMat::from_ints(r, {{3, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}});
      EXPECT_FALSE(is_invertible(three.multiply(a)));
    }
  }
}

TEST(ModuleOps, RankIdentity) {
  const GaloisRing& r = z9();
  std::mt19937_64 rng(4);
  for (int t = 0; t < 60; ++t) {
    const std::size_t cols = 1 + t % 3;
    const ChainMat a = testing::random_mat(r, 1 + t % 2, cols, rng);
    const ChainMat b = testing::random_mat(r, 1 + (t / 2) % 2, cols, rng);
    const auto sa = span_of(a), sb = span_of(b);
    std::vector<std::vector<GrElem>> inter;
    std::set_intersection(sa.begin(), sa.end(), sb.begin(), sb.end(), std::back_inserter(inter));
    const ChainMat s = module_sum(a, b);
    const ChainMat i = module_intersect(a, b);
    const auto ss = span_of(s);
    EXPECT_EQ(span_of(i), inter);
    EXPECT_EQ(ss.size() * inter.size(), sa.size() * sb.size());
    EXPECT_EQ(howell_form(module_intersect(a, a)), howell_form(a));
    EXPECT_EQ(howell_form(module_sum(a, ChainMat(r, 0, cols))), howell_form(a));
  }
}

TEST(SolveLeft, Random) {
  const GaloisRing& r = z9();
  std::mt19937_64 rng(6);
  for (int t = 0; t < 30; ++t) {
    const ChainMat m = testing::random_mat(r, 2, 3, rng);
    const auto span = span_of(m);
    for (int k = 0; k < 10; ++k) {
      const ChainMat v = testing::random_mat(r, 1, 3, rng);
      const std::vector<GrElem> target(v.row(0).begin(), v.row(0).end());
      const auto x = solve_left(m, target);
      EXPECT_EQ(x.has_value(), in_span(span, target));
      if (x) {
        const ChainMat xm = ChainMat(r, 2, {*x}).multiply(m);
        EXPECT_EQ(std::vector<GrElem>(xm.row(0).begin(), xm.row(0).end()), target);
      }
    }
  }
}

TEST(FreeBasis, PivotValuationDoesNotDecide) {
  const GaloisRing& r = z9();
  // R (3,3,1,1): pivot 3 yet free of rank 1.
  const ChainMat m = ChainMat::from_ints(r, {{3, 3, 1, 1}});
  const auto b = free_basis(howell_form(m));
  ASSERT_TRUE(b.has_value());
  EXPECT_EQ(b->rows(), 1u);
  EXPECT_FALSE(free_basis(ChainMat::from_ints(r, {{3, 0}})).has_value());
  std::mt19937_64 rng(8);
  for (int t = 0; t < 40; ++t) {
    const ChainMat a = testing::random_mat(r, 2, 3, rng);
    const auto fb = free_basis(howell_form(a));
    const auto span = span_of(a);
    // Free of rank k iff 9^k elements and some k rows reach all of them.
    if (fb) {
      EXPECT_EQ(span_of(*fb), span);
      std::uint64_t want = 1;
      for (std::size_t i = 0; i < fb->rows(); ++i) want *= 9;
      EXPECT_EQ(span.size(), want);
    }
  }
}

TEST(Generator, ExampleOneIsFreeOfRankN) {
  const auto b = testing::basis(testing::z9(), 8);
  const GaloisRing& r = b->ring();
  const auto c = AdditiveCyclicCode::make(b, b->one(), testing::P(r, {0, 1}), b->full());
  const RankProfile p = rank_profile(c.generator_matrix());
  EXPECT_EQ(p.free_rank, 8u);
}

}  // namespace
}  // namespace chainacp
