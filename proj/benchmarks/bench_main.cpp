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

#include <benchmark/benchmark.h>

#include <random>

#include "chainacp/acp.hpp"
#include "chainacp/trace_duality.hpp"

namespace {

using namespace chainacp;

void BM_Howell(benchmark::State& state) {
  const GaloisRing ring(3, 2, 1);
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::int64_t> dist(0, 8);
  std::vector<std::vector<std::int64_t>> rows(n, std::vector<std::int64_t>(n));
  for (auto& r : rows)
    for (auto& v : r) v = dist(rng);
  const ChainMat m = ChainMat::from_ints(ring, rows);
  for (auto _ : state) benchmark::DoNotOptimize(howell_form(m));
}
BENCHMARK(BM_Howell)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

void BM_FactorXn1(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const ContextPtr ctx = ExtensionContext::build(3, 2, 1);
  for (auto _ : state) benchmark::DoNotOptimize(FactorBasis::build(ctx, n));
}
BENCHMARK(BM_FactorXn1)->Arg(8)->Arg(16)->Arg(40)->Arg(80);

void BM_TraceDual(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const FactorBasisPtr basis = FactorBasis::build(ExtensionContext::build(3, 2, 1), n);
  const GaloisRing& ring = basis->ring();
  const AdditiveCyclicCode c =
      AdditiveCyclicCode::make(basis, basis->one(), Poly::monomial(ring, 1, ring.one()), basis->full());
  for (auto _ : state) benchmark::DoNotOptimize(trace_dual(c.raw()));
}
BENCHMARK(BM_TraceDual)->Arg(4)->Arg(8)->Arg(16);

void BM_AcpVerdict(benchmark::State& state) {
  const FactorBasisPtr basis = FactorBasis::build(ExtensionContext::build(3, 2, 1), 8);
  const auto pairs = construct_acp_pairs(basis, false, kDefaultBudget);
  std::size_t k = 0;
  for (auto _ : state) {
    const auto& pr = pairs[k++ % pairs.size()];
    benchmark::DoNotOptimize(acp_verdict(pr.c, pr.d));
  }
}
BENCHMARK(BM_AcpVerdict);

}  // namespace

BENCHMARK_MAIN();
