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

#include "chainacp/acp.hpp"
#include "chainacp/oracle.hpp"
#include "chainacp/trace_duality.hpp"
#include "test_util.hpp"

namespace chainacp {
namespace {

using testing::P;

AdditiveCyclicCode code(const FactorBasisPtr& b, std::vector<std::int64_t> f, std::vector<std::int64_t> r,
                        std::vector<std::int64_t> g) {
  const GaloisRing& ring = b->ring();
  return AdditiveCyclicCode::make(b, b->require_divisor(P(ring, f)), P(ring, r), b->require_divisor(P(ring, g)));
}

class AcpTwo : public ::testing::Test {
 protected:
  FactorBasisPtr b = testing::basis(testing::z9(), 2);
  AdditiveCyclicCode full = code(b, {1}, {}, {1});
  AdditiveCyclicCode zero = code(b, {8, 0, 1}, {}, {8, 0, 1});
  AdditiveCyclicCode mu = code(b, {8, 0, 1}, {}, {1});
  AdditiveCyclicCode c = code(b, {1, 1}, {}, {8, 1});
  AdditiveCyclicCode d = code(b, {8, 1}, {}, {1, 1});
};

TEST_F(AcpTwo, Definitional) {
  EXPECT_TRUE(is_acp_definitional(full, zero));
  EXPECT_FALSE(is_acp_definitional(mu, mu));
  EXPECT_TRUE(is_acp_definitional(c, d));
  EXPECT_TRUE(oracle::brute_acp(oracle::brute_code(c, kDefaultBudget), oracle::brute_code(d, kDefaultBudget), kDefaultBudget));
}

TEST_F(AcpTwo, OtherCriteria) {
  EXPECT_TRUE(is_acp_polynomial(c, d));
  EXPECT_FALSE(is_acp_polynomial(full, full));
  EXPECT_TRUE(is_acp_matrix(full, zero));
  std::string diag;
  EXPECT_FALSE(is_acp_matrix(full, full, &diag));
  EXPECT_FALSE(diag.empty());
  EXPECT_TRUE(is_acp_projection(c, d));
  EXPECT_FALSE(is_acp_projection(c, c));
  EXPECT_FALSE(is_acp_definitional(c, c));
  const AcpVerdict v = acp_verdict(c, d);
  EXPECT_TRUE(v.definitional && v.polynomial && v.matrix && v.projection);
}

TEST_F(AcpTwo, TraceProductOfFullAndZero) {
  const auto ctx = b->context();
  const ChainMat t = trace_product(*ctx, full.generator_words(), full.generator_words());
  const GaloisRing& r = b->ring();
  const RElem two_theta = r.scale(ctx->theta(), 2);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      const RElem want = i != j ? r.zero() : (i < 2 ? r.from_int(2) : two_theta);
      EXPECT_EQ(t.at(i, j), want);
    }
}

TEST_F(AcpTwo, MatrixAndProjectionAgreeWithDefinition) {
  const auto all = canonical_codes(b, true, kDefaultBudget);
  for (const auto& x : all)
    for (const auto& y : all) {
      const AcpVerdict v = acp_verdict(x, y);
      EXPECT_EQ(v.matrix, v.definitional);
      EXPECT_EQ(v.projection, v.definitional);
    }
}

TEST_F(AcpTwo, PolynomialCriterionCounterexample) {
  // Complementary pair whose f-divisors are not complementary.
  const auto x = code(b, {1}, {}, {8, 1});
  const auto y = code(b, {1, 1}, {1}, {8, 0, 1});
  EXPECT_TRUE(is_acp_definitional(x, y));
  EXPECT_TRUE(oracle::brute_acp(oracle::brute_code(x, kDefaultBudget), oracle::brute_code(y, kDefaultBudget), kDefaultBudget));
  EXPECT_FALSE(is_acp_polynomial(x, y));
}

TEST_F(AcpTwo, VerdictsDoNotDependOnMu) {
  // Under mu' = 2 mu the code written (f, r0, g) is (f, 2 r0, g) in the mu presentation.
  const GaloisRing& r = b->ring();
  const auto remap = [&](const AdditiveCyclicCode& x) {
    return AdditiveCyclicCode::make_twisted(b, x.f(), poly::scale(r, r.from_int(2), x.twist()), x.g());
  };
  const auto all = canonical_codes(b, true, kDefaultBudget);
  for (const auto& x : all)
    for (const auto& y : all) {
      const AcpVerdict v = acp_verdict(x, y);
      const AcpVerdict w = acp_verdict(remap(x), remap(y));
      EXPECT_EQ(v.definitional, w.definitional);
      EXPECT_EQ(v.polynomial, w.polynomial);
      EXPECT_EQ(v.matrix, w.matrix);
      EXPECT_EQ(v.projection, w.projection);
    }
}

TEST(Construct, Counts) {
  const auto b2 = testing::basis(testing::z9(), 2);
  // 2^2 choices of f1 times 2^2 choices of g1.
  EXPECT_EQ(construct_acp_pairs(b2, false, kDefaultBudget).size(), 16u);
  const auto b8 = testing::basis(testing::z9(), 8);
  const auto pairs = construct_acp_pairs(b8, false, kDefaultBudget);
  EXPECT_EQ(pairs.size(), 1024u);
  for (const auto& p : pairs) {
    EXPECT_TRUE(p.verdict.definitional);
    EXPECT_TRUE(p.verdict.agree());
  }
}

TEST_F(AcpTwo, SecurityParameter) {
  EXPECT_EQ(security_parameter(full, zero, kDefaultBudget), 1u);
  const std::size_t s = security_parameter(c, d, kDefaultBudget);
  const auto dual_d = oracle::brute_dual(oracle::brute_code(d, kDefaultBudget), kDefaultBudget);
  std::size_t best = 99;
  for (const auto& set : {oracle::brute_code(c, kDefaultBudget), dual_d})
    for (const auto& w : set.words())
      if (!word::is_zero(w)) best = std::min(best, word::weight(*b->context(), w));
  EXPECT_EQ(s, best);
  EXPECT_EQ(security_parameter(c.sigma(), d.sigma(), kDefaultBudget), s);
}

TEST(Audit, LengthTwoNoTwist) {
  const auto s = audit_theorems(testing::basis(testing::z9(), 2), false, kDefaultBudget);
  EXPECT_EQ(s.codes, 16u);
  EXPECT_EQ(s.pairs_scanned, 256u);
  EXPECT_FALSE(s.records.empty());
  for (const auto& r : s.records) {
    EXPECT_FALSE(r.counterexample) << r.c.describe() << " | " << r.d.describe();
    EXPECT_TRUE(r.norem_holds);
    EXPECT_TRUE(r.sigma_dual_holds);
    ASSERT_TRUE(r.corollary.has_value());
    EXPECT_TRUE(r.corollary->equivalent());
  }
  EXPECT_TRUE(s.anomalies.empty());
}

TEST(Audit, FieldCaseLengthFour) {
  const auto s = audit_theorems(testing::basis(testing::f3(), 4), false, kDefaultBudget);
  for (const auto& r : s.records) {
    // LCP cyclic pair: C equals the reversed dual of D.
    EXPECT_EQ(trace_dual(r.c), r.d.sigma());
    EXPECT_FALSE(r.counterexample);
  }
}

}  // namespace
}  // namespace chainacp
