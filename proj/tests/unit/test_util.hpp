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

#ifndef CHAINACP_TESTS_TEST_UTIL_HPP
#define CHAINACP_TESTS_TEST_UTIL_HPP

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "chainacp/additive_codes.hpp"

namespace chainacp::testing {

inline ContextPtr z9() { return ExtensionContext::build(3, 2, 1); }
inline ContextPtr f3() { return ExtensionContext::build(3, 1, 1); }

inline FactorBasisPtr basis(const ContextPtr& ctx, int n) { return FactorBasis::build(ctx, n); }

inline Poly P(const GaloisRing& ring, std::vector<std::int64_t> c) { return Poly::from_ints(ring, c); }

inline SElem S(const ExtensionContext& ctx, std::int64_t a, std::int64_t b) {
  return {ctx.ring().from_int(a), ctx.ring().from_int(b)};
}

inline CyclicWord W(const ExtensionContext& ctx, const std::vector<std::pair<std::int64_t, std::int64_t>>& c) {
  std::vector<SElem> v;
  for (auto [a, b] : c) v.push_back(S(ctx, a, b));
  return CyclicWord(v);
}

inline ChainMat random_mat(const GaloisRing& ring, std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint64_t> d(0, ring.size() - 1);
  ChainMat m(ring, 0, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    std::vector<GrElem> r(cols);
    for (auto& x : r) x = ring.element(d(rng));
    m.append_row(r);
  }
  return m;
}

/// Every R-combination of the rows of m, sorted and deduplicated.
inline std::vector<std::vector<GrElem>> span_of(const ChainMat& m) {
  const GaloisRing& ring = m.ring();
  std::vector<std::vector<GrElem>> out;
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < m.rows(); ++i) total *= ring.size();
  for (std::uint64_t code = 0; code < total; ++code) {
    std::vector<GrElem> v(m.cols());
    std::uint64_t c = code;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      const GrElem k = ring.element(c % ring.size());
      c /= ring.size();
      for (std::size_t j = 0; j < m.cols(); ++j) v[j] = ring.add(v[j], ring.mul(k, m.at(i, j)));
    }
    out.push_back(v);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace chainacp::testing

#endif  // CHAINACP_TESTS_TEST_UTIL_HPP
