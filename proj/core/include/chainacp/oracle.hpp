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

#ifndef CHAINACP_ORACLE_HPP
#define CHAINACP_ORACLE_HPP

#include <cstdint>
#include <vector>

#include "chainacp/additive_codes.hpp"

// Brute-force references. Nothing here uses Howell forms or factorizations.
namespace chainacp::oracle {

/// Sorted, deduplicated set of words of one length over one context.
class WordSet {
 public:
  WordSet(ContextPtr ctx, int n, std::vector<CyclicWord> words);

  const ContextPtr& context() const noexcept { return ctx_; }
  int n() const noexcept { return n_; }
  const std::vector<CyclicWord>& words() const noexcept { return words_; }
  std::size_t size() const noexcept { return words_.size(); }
  bool contains(const CyclicWord& w) const;

  friend bool operator==(const WordSet& a, const WordSet& b) noexcept { return a.n_ == b.n_ && a.words_ == b.words_; }

 private:
  ContextPtr ctx_;
  int n_;
  std::vector<CyclicWord> words_;
};

/// |S|^n, saturating.
std::uint64_t ambient_size(const ExtensionContext& ctx, int n);

/// Smallest R-submodule containing `words`, closed under the cyclic shift when `cyclic`.
/// Fixpoint of addition over the R-multiples (and shifts) of the inputs.
WordSet brute_span(ContextPtr ctx, int n, const std::vector<CyclicWord>& words, std::uint64_t budget, bool cyclic = true);

/// All codewords of c, from its generator words by brute_span.
WordSet brute_code(const AdditiveCyclicCode& c, std::uint64_t budget);
/// All elements of m, from its rows by brute_span without shifts.
WordSet brute_module(const RawModule& m, std::uint64_t budget);

/// Every ambient word whose trace product with each member vanishes.
WordSet brute_dual(const WordSet& c, std::uint64_t budget);

WordSet brute_sum(const WordSet& a, const WordSet& b, std::uint64_t budget);
WordSet brute_intersect(const WordSet& a, const WordSet& b);
/// a + b = S^n and a cap b = {0}, both by enumeration.
bool brute_acp(const WordSet& a, const WordSet& b, std::uint64_t budget);

}  // namespace chainacp::oracle

#endif  // CHAINACP_ORACLE_HPP
