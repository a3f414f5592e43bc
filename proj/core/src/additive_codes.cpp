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

#include "chainacp/additive_codes.hpp"

#include <algorithm>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>

#include "chainacp/errors.hpp"

namespace chainacp {

namespace {

std::uint64_t saturating_pow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t out = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (base != 0 && out > std::numeric_limits<std::uint64_t>::max() / base) return std::numeric_limits<std::uint64_t>::max();
    out *= base;
  }
  return out;
}

std::vector<GrElem> poly_vector(const Poly& a, int n) {
  std::vector<GrElem> v(static_cast<std::size_t>(n));
  for (int i = 0; i <= a.degree() && i < n; ++i) v[static_cast<std::size_t>(i)] = a.coeff(i);
  return v;
}

// Howell form of the ideal <a> inside R^n for a monic divisor a of x^n - 1.
ChainMat ideal_howell(const GaloisRing& ring, int n, const Poly& a) {
  ChainMat m(ring, 0, static_cast<std::size_t>(n));
  for (int i = 0; i + a.degree() < n; ++i) m.append_row(poly_vector(poly::mul(ring, Poly::monomial(ring, i, ring.one()), a), n));
  return howell_form(m);
}

std::optional<Divisor> match_ideal(const FactorBasis& basis, const ChainMat& h) {
  const int n = basis.n();
  const RankProfile prof = rank_profile(h);
  if (!prof.is_free()) return std::nullopt;
  const int deg = n - static_cast<int>(prof.free_rank);
  for (const Divisor& d : basis.all_divisors()) {
    if (d.degree() != deg) continue;
    if (ideal_howell(basis.ring(), n, d.poly) == h) return d;
  }
  return std::nullopt;
}

void require_length(const FactorBasis& basis, const CyclicWord& w) {
  if (static_cast<int>(w.n()) != basis.n())
    throw LevelMismatch("word of length " + std::to_string(w.n()) + " used with length " + std::to_string(basis.n()));
}

}  // namespace

// RawModule

RawModule RawModule::cyclic_span(FactorBasisPtr basis, const std::vector<CyclicWord>& words) {
  const GaloisRing& ring = basis->ring();
  const int n = basis->n();
  ChainMat m(ring, 0, static_cast<std::size_t>(2 * n));
  for (const auto& w : words) {
    require_length(*basis, w);
    for (int s = 0; s < n; ++s) m.append_row(word::flatten(word::shift(w, static_cast<std::size_t>(s))));
  }
  ChainMat h = howell_form(m);
  return RawModule(std::move(basis), std::move(h));
}

RawModule RawModule::from_rows(FactorBasisPtr basis, const ChainMat& rows) {
  if (rows.cols() != static_cast<std::size_t>(2 * basis->n())) throw ShapeError("module rows must have 2n columns");
  ChainMat h = howell_form(rows);
  return RawModule(std::move(basis), std::move(h));
}

bool RawModule::contains(const CyclicWord& w) const {
  require_length(*basis_, w);
  const auto v = word::flatten(w);
  return howell_contains(howell_, v);
}

std::vector<CyclicWord> RawModule::rows() const {
  std::vector<CyclicWord> out;
  for (std::size_t i = 0; i < howell_.rows(); ++i) out.push_back(word::unflatten(howell_.row(i)));
  return out;
}

RawModule RawModule::sum(const RawModule& other) const {
  if (other.n() != n()) throw LevelMismatch("module sum: lengths differ");
  return RawModule(basis_, module_sum(howell_, other.howell_));
}

RawModule RawModule::intersect(const RawModule& other) const {
  if (other.n() != n()) throw LevelMismatch("module intersection: lengths differ");
  if (is_zero() || other.is_zero()) return RawModule(basis_, ChainMat(basis_->ring(), 0, howell_.cols()));
  return RawModule(basis_, module_intersect(howell_, other.howell_));
}

// AdditiveCyclicCode

namespace {

std::vector<CyclicWord> generator_words_of(const FactorBasis& basis, const Divisor& f, const Poly& r0, const Divisor& g) {
  const ExtensionContext& ctx = *basis.context();
  const GaloisRing& ring = basis.ring();
  const int n = basis.n();
  std::vector<CyclicWord> out;
  const CyclicWord head = word::from_parts(ctx, n, f.poly, r0);
  for (int i = 0; i < n - f.degree(); ++i) out.push_back(word::shift(head, static_cast<std::size_t>(i)));
  const CyclicWord tail = word::from_parts(ctx, n, Poly{}, g.poly);
  for (int j = 0; j < n - g.degree(); ++j) out.push_back(word::shift(tail, static_cast<std::size_t>(j)));
  (void)ring;
  return out;
}

ChainMat rows_of(const FactorBasis& basis, const std::vector<CyclicWord>& words) {
  ChainMat m(basis.ring(), 0, static_cast<std::size_t>(2 * basis.n()));
  for (const auto& w : words) m.append_row(word::flatten(w));
  return m;
}

}  // namespace

AdditiveCyclicCode::AdditiveCyclicCode(FactorBasisPtr basis, Divisor f, Poly r0, Divisor g)
    : basis_(std::move(basis)),
      f_(std::move(f)),
      r0_(std::move(r0)),
      g_(std::move(g)),
      raw_(RawModule::from_rows(basis_, rows_of(*basis_, generator_words_of(*basis_, f_, r0_, g_)))) {}

AdditiveCyclicCode AdditiveCyclicCode::make_twisted(FactorBasisPtr basis, const Divisor& f, const Poly& r0,
                                                    const Divisor& g) {
  const GaloisRing& ring = basis->ring();
  const Divisor fc = basis->divisor(f.mask);
  const Divisor gc = basis->divisor(g.mask);
  if (fc.poly != f.poly || gc.poly != g.poly) throw NotADivisor("divisor does not belong to this factor basis");
  if (!r0.is_zero() && r0.degree() >= g.degree())
    throw InvalidCode("twist degree " + std::to_string(r0.degree()) + " must be below deg g = " +
                      std::to_string(g.degree()));
  const Divisor w = basis->gcd(f, g);
  if (!poly::divides(ring, w.poly, r0))
    throw InvalidCode("gcd(f, g) = " + poly::format(ring, w.poly) + " does not divide the twist " +
                      poly::format(ring, r0));
  return AdditiveCyclicCode(std::move(basis), fc, r0, gc);
}

AdditiveCyclicCode AdditiveCyclicCode::make(FactorBasisPtr basis, const Divisor& f, const Poly& r, const Divisor& g) {
  const GaloisRing& ring = basis->ring();
  if (!r.is_zero() && f.degree() + r.degree() >= g.degree())
    throw InvalidCode("deg(f r) = " + std::to_string(f.degree() + r.degree()) + " must be below deg g = " +
                      std::to_string(g.degree()));
  Poly r0 = poly::mul(ring, f.poly, r);
  return make_twisted(std::move(basis), f, r0, g);
}

AdditiveCyclicCode AdditiveCyclicCode::from_generators(FactorBasisPtr basis, const std::vector<CyclicWord>& words) {
  return from_module(RawModule::cyclic_span(std::move(basis), words));
}

AdditiveCyclicCode AdditiveCyclicCode::from_module(const RawModule& m) {
  const FactorBasisPtr& basis = m.basis();
  const GaloisRing& ring = basis->ring();
  const int n = basis->n();
  const auto nn = static_cast<std::size_t>(n);
  const ChainMat& h = m.howell();
  const auto pcols = pivot_columns(h);

  ChainMat upper(ring, 0, 2 * nn);
  ChainMat lower(ring, 0, 2 * nn);
  for (std::size_t i = 0; i < h.rows(); ++i) (pcols[i] < nn ? upper : lower).append_row(h.row(i));

  if (!m.is_free()) throw NotFree("span is not a free R-module");
  const auto f = match_ideal(*basis, howell_form(upper.column_block(0, nn)));
  if (!f) throw NoCanonicalTriple("free module whose first-component projection is not a divisor ideal");
  const auto g = match_ideal(*basis, howell_form(lower.column_block(nn, nn)));
  if (!g) throw NoCanonicalTriple("free module whose projection kernel is not mu times a divisor ideal");

  Poly r0;
  if (f->degree() < n) {
    const auto x = solve_left(upper.column_block(0, nn), poly_vector(f->poly, n));
    if (!x) throw std::logic_error("from_module: f lies in the projection but has no preimage");
    std::vector<GrElem> b(nn);
    for (std::size_t i = 0; i < upper.rows(); ++i)
      for (std::size_t j = 0; j < nn; ++j) b[j] = ring.add(b[j], ring.mul((*x)[i], upper.at(i, nn + j)));
    r0 = poly::rem(ring, Poly(std::move(b)), g->poly);
  }
  AdditiveCyclicCode c = make_twisted(basis, *f, r0, *g);
  if (!(c.raw_ == m)) throw NoCanonicalTriple("module is not generated by f + mu r0 and mu g");
  return c;
}

std::optional<Poly> AdditiveCyclicCode::r() const {
  if (r0_.is_zero()) return Poly{};
  if (!poly::divides(ring(), f_.poly, r0_)) return std::nullopt;
  return poly::exact_div(ring(), r0_, f_.poly);
}

std::uint64_t AdditiveCyclicCode::log_cardinality() const noexcept {
  return static_cast<std::uint64_t>(ctx().e()) * static_cast<std::uint64_t>(ctx().m()) *
         static_cast<std::uint64_t>(rank());
}

std::vector<CyclicWord> AdditiveCyclicCode::generator_words() const {
  return generator_words_of(*basis_, f_, r0_, g_);
}

ChainMat AdditiveCyclicCode::generator_matrix() const { return rows_of(*basis_, generator_words()); }

namespace {

// Visits every R-combination of the rows of g as a flat vector in R^{2n}.
template <class Fn>
void for_each_flat(const ChainMat& g, std::uint64_t budget, Fn&& fn) {
  const GaloisRing& ring = g.ring();
  const std::uint64_t size = ring.size();
  const std::uint64_t total = saturating_pow(size, g.rows());
  if (total > budget)
    throw BudgetExceeded("enumeration needs " + std::to_string(size) + "^" + std::to_string(g.rows()) +
                         " words, budget is " + std::to_string(budget));
  std::vector<GrElem> cur(g.cols());
  std::vector<std::uint64_t> digit(g.rows(), 0);
  const GrElem top = ring.element(size - 1);
  for (;;) {
    if (!fn(std::span<const GrElem>(cur))) return;
    std::size_t k = 0;
    while (k < digit.size() && digit[k] == size - 1) {
      // Wrap digit k back to zero.
      const GrElem d = ring.neg(top);
      for (std::size_t j = 0; j < g.cols(); ++j) cur[j] = ring.add(cur[j], ring.mul(d, g.at(k, j)));
      digit[k] = 0;
      ++k;
    }
    if (k == digit.size()) return;
    const GrElem d = ring.sub(ring.element(digit[k] + 1), ring.element(digit[k]));
    for (std::size_t j = 0; j < g.cols(); ++j) cur[j] = ring.add(cur[j], ring.mul(d, g.at(k, j)));
    ++digit[k];
  }
}

}  // namespace

void AdditiveCyclicCode::for_each_word(std::uint64_t budget, const std::function<void(const CyclicWord&)>& fn) const {
  for_each_flat(generator_matrix(), budget, [&](std::span<const GrElem> v) {
    fn(word::unflatten(v));
    return true;
  });
}

std::vector<CyclicWord> AdditiveCyclicCode::enumerate(std::uint64_t budget) const {
  std::vector<CyclicWord> out;
  for_each_word(budget, [&](const CyclicWord& w) { out.push_back(w); });
  return out;
}

AdditiveCyclicCode AdditiveCyclicCode::project() const {
  FactorBasisPtr rb = basis_->residue_basis();
  if (rb.get() == basis_.get()) return *this;
  const GaloisRing& target = rb->ring();
  return make_twisted(rb, rb->divisor(f_.mask), poly::change_ring(ring(), target, r0_), rb->divisor(g_.mask));
}

AdditiveCyclicCode AdditiveCyclicCode::sigma() const {
  std::vector<CyclicWord> words;
  for (const auto& w : generator_words()) words.push_back(word::sigma(w));
  return from_generators(basis_, words);
}

std::string AdditiveCyclicCode::describe() const {
  std::string s = "f=" + poly::format(ring(), f_.poly);
  if (auto rr = r()) {
    s += ", r=" + poly::format(ring(), *rr);
  } else {
    s += ", r0=" + poly::format(ring(), r0_);
  }
  s += ", g=" + poly::format(ring(), g_.poly);
  return s;
}

namespace {

std::size_t min_weight(const ChainMat& gen, std::uint64_t budget) {
  const GaloisRing& ring = gen.ring();
  const std::size_t n = gen.cols() / 2;
  std::size_t best = n + 1;
  for_each_flat(gen, budget, [&](std::span<const GrElem> v) {
    std::size_t w = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (!ring.is_zero(v[i]) || !ring.is_zero(v[n + i])) ++w;
    if (w > 0 && w < best) best = w;
    return best > 1;
  });
  return best;
}

}  // namespace

std::size_t min_distance(const AdditiveCyclicCode& c, std::uint64_t budget) {
  if (c.rank() == 0) throw ZeroCode("minimum distance of the zero code is undefined");
  return min_weight(c.generator_matrix(), budget);
}

std::size_t min_distance(const RawModule& m, std::uint64_t budget) {
  if (m.is_zero()) throw ZeroCode("minimum distance of the zero code is undefined");
  auto b = m.basis_rows();
  if (!b) throw NotFree("minimum distance needs a free module");
  return min_weight(*b, budget);
}

std::vector<AdditiveCyclicCode> canonical_codes(const FactorBasisPtr& basis, bool include_r, std::uint64_t budget) {
  const GaloisRing& ring = basis->ring();
  const auto divisors = basis->all_divisors();
  std::uint64_t total = 0;
  for (const auto& f : divisors)
    for (const auto& g : divisors) {
      const int free = include_r ? std::max(0, g.degree() - f.degree()) : 0;
      total = std::min(std::numeric_limits<std::uint64_t>::max() - 1, total + saturating_pow(ring.size(), static_cast<std::uint64_t>(free)));
    }
  if (total > budget)
    throw BudgetExceeded("canonical grid has " + std::to_string(total) + " codes, budget is " + std::to_string(budget));
  std::vector<AdditiveCyclicCode> out;
  out.reserve(total);
  for (const auto& f : divisors)
    for (const auto& g : divisors) {
      const int free = include_r ? std::max(0, g.degree() - f.degree()) : 0;
      const std::uint64_t count = saturating_pow(ring.size(), static_cast<std::uint64_t>(free));
      for (std::uint64_t idx = 0; idx < count; ++idx) {
        // Digit k of idx (base |R|, least significant last) is the coefficient of x^k.
        std::vector<GrElem> coeffs(static_cast<std::size_t>(free));
        std::uint64_t rest = idx;
        for (int k = free - 1; k >= 0; --k) {
          coeffs[static_cast<std::size_t>(k)] = ring.element(rest % ring.size());
          rest /= ring.size();
        }
        out.push_back(AdditiveCyclicCode::make(basis, f, Poly(std::move(coeffs)), g));
      }
    }
  return out;
}

}  // namespace chainacp
