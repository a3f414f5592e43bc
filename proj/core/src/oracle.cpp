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

#include "chainacp/oracle.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <string>
#include <unordered_set>
#include <utility>

#include "chainacp/errors.hpp"

namespace chainacp::oracle {

namespace {

// Words as base-|S| integers, position 0 most significant, so integer order is word order.
class Codec {
 public:
  Codec(const ExtensionContext& ctx, int n) : ctx_(ctx), n_(static_cast<std::size_t>(n)), base_(ctx.s_size()) {}

  std::uint64_t encode(const CyclicWord& w) const {
    std::uint64_t v = 0;
    for (std::size_t i = 0; i < n_; ++i) v = v * base_ + ctx_.s_index(w[i]);
    return v;
  }
  CyclicWord decode(std::uint64_t v) const {
    CyclicWord w(n_);
    for (std::size_t i = n_; i-- > 0;) {
      w[i] = ctx_.s_element(v % base_);
      v /= base_;
    }
    return w;
  }

 private:
  const ExtensionContext& ctx_;
  std::size_t n_;
  std::uint64_t base_;
};

void require_n(const CyclicWord& w, int n) {
  if (static_cast<int>(w.n()) != n) throw LevelMismatch("word length differs from n = " + std::to_string(n));
}

void require_same(const WordSet& a, const WordSet& b) {
  if (a.n() != b.n() || !(*a.context() == *b.context())) throw LevelMismatch("word sets live in different spaces");
}

}  // namespace

WordSet::WordSet(ContextPtr ctx, int n, std::vector<CyclicWord> words)
    : ctx_(std::move(ctx)), n_(n), words_(std::move(words)) {
  for (const auto& w : words_) require_n(w, n_);
  std::sort(words_.begin(), words_.end());
  words_.erase(std::unique(words_.begin(), words_.end()), words_.end());
}

bool WordSet::contains(const CyclicWord& w) const { return std::binary_search(words_.begin(), words_.end(), w); }

std::uint64_t ambient_size(const ExtensionContext& ctx, int n) {
  std::uint64_t out = 1;
  for (int i = 0; i < n; ++i) {
    if (out > std::numeric_limits<std::uint64_t>::max() / ctx.s_size()) return std::numeric_limits<std::uint64_t>::max();
    out *= ctx.s_size();
  }
  return out;
}

WordSet brute_span(ContextPtr ctx, int n, const std::vector<CyclicWord>& words, std::uint64_t budget, bool cyclic) {
  const ExtensionContext& c = *ctx;
  const GaloisRing& ring = c.ring();
  std::vector<CyclicWord> gens;
  for (const auto& w : words) {
    require_n(w, n);
    const int shifts = cyclic ? n : 1;
    for (int s = 0; s < shifts; ++s) {
      const CyclicWord sw = word::shift(w, static_cast<std::size_t>(s));
      for (std::uint64_t k = 1; k < ring.size(); ++k) gens.push_back(word::scale(c, ring.element(k), sw));
    }
  }
  const Codec codec(c, n);
  std::unordered_set<std::uint64_t> seen;
  std::deque<CyclicWord> queue;
  const CyclicWord zero(static_cast<std::size_t>(n));
  seen.insert(codec.encode(zero));
  queue.push_back(zero);
  while (!queue.empty()) {
    const CyclicWord cur = std::move(queue.front());
    queue.pop_front();
    for (const auto& g : gens) {
      CyclicWord next = word::add(c, cur, g);
      if (seen.insert(codec.encode(next)).second) {
        if (seen.size() > budget) throw BudgetExceeded("span exceeds budget " + std::to_string(budget));
        queue.push_back(std::move(next));
      }
    }
  }
  std::vector<std::uint64_t> codes(seen.begin(), seen.end());
  std::sort(codes.begin(), codes.end());
  std::vector<CyclicWord> out;
  out.reserve(codes.size());
  for (auto v : codes) out.push_back(codec.decode(v));
  return WordSet(std::move(ctx), n, std::move(out));
}

WordSet brute_code(const AdditiveCyclicCode& c, std::uint64_t budget) {
  return brute_span(c.basis()->context(), c.n(), c.generator_words(), budget, true);
}

WordSet brute_module(const RawModule& m, std::uint64_t budget) {
  return brute_span(m.basis()->context(), m.n(), m.rows(), budget, false);
}

WordSet brute_dual(const WordSet& c, std::uint64_t budget) {
  const ExtensionContext& ctx = *c.context();
  const GaloisRing& ring = ctx.ring();
  const std::uint64_t total = ambient_size(ctx, c.n());
  if (total > budget)
    throw BudgetExceeded("ambient space has " + std::to_string(total) + " words, budget is " + std::to_string(budget));
  const Codec codec(ctx, c.n());
  std::vector<CyclicWord> out;
  for (std::uint64_t v = 0; v < total; ++v) {
    const CyclicWord u = codec.decode(v);
    bool orthogonal = true;
    for (const auto& w : c.words())
      if (!ring.is_zero(word::circledast(ctx, u, w))) {
        orthogonal = false;
        break;
      }
    if (orthogonal) out.push_back(u);
  }
  return WordSet(c.context(), c.n(), std::move(out));
}

WordSet brute_sum(const WordSet& a, const WordSet& b, std::uint64_t budget) {
  require_same(a, b);
  const ExtensionContext& ctx = *a.context();
  const Codec codec(ctx, a.n());
  std::unordered_set<std::uint64_t> seen;
  for (const auto& x : a.words())
    for (const auto& y : b.words()) {
      if (seen.insert(codec.encode(word::add(ctx, x, y))).second && seen.size() > budget)
        throw BudgetExceeded("sum exceeds budget " + std::to_string(budget));
    }
  std::vector<CyclicWord> out;
  out.reserve(seen.size());
  for (auto v : seen) out.push_back(codec.decode(v));
  return WordSet(a.context(), a.n(), std::move(out));
}

WordSet brute_intersect(const WordSet& a, const WordSet& b) {
  require_same(a, b);
  std::vector<CyclicWord> out;
  std::set_intersection(a.words().begin(), a.words().end(), b.words().begin(), b.words().end(), std::back_inserter(out));
  return WordSet(a.context(), a.n(), std::move(out));
}

bool brute_acp(const WordSet& a, const WordSet& b, std::uint64_t budget) {
  if (brute_intersect(a, b).size() != 1) return false;
  return brute_sum(a, b, budget).size() == ambient_size(*a.context(), a.n());
}

}  // namespace chainacp::oracle
