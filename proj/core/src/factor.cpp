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

// Factorization of x^n - 1 over R through Teichmuller roots of unity.

#include <algorithm>
#include <numeric>

#include "chainacp/chain_linalg.hpp"
#include "chainacp/errors.hpp"
#include "chainacp/poly_cyclic.hpp"

namespace chainacp {

namespace {

int multiplicative_order(std::int64_t q, int n) {
  if (n == 1) return 1;
  std::int64_t acc = q % n;
  int t = 1;
  while (acc != 1) {
    acc = acc * q % n;
    ++t;
  }
  return t;
}

// Maps elements of the splitting ring T back into R, given the image rho of y.
class Pullback {
 public:
  Pullback(const GaloisRing& r, const GaloisRing& t, const GrElem& rho) : r_(r), base_(r.p(), r.e(), 1), coords_(base_, 0, static_cast<std::size_t>(t.degree())) {
    GrElem power = t.one();
    for (int k = 0; k < r.degree(); ++k) {
      std::vector<GrElem> row;
      for (int i = 0; i < t.degree(); ++i) row.push_back(base_.from_int(power.c[i]));
      coords_.append_row(row);
      power = t.mul(power, rho);
    }
    degree_ = t.degree();
  }

  GrElem operator()(const GrElem& x) const {
    std::vector<GrElem> target;
    for (int i = 0; i < degree_; ++i) target.push_back(base_.from_int(x.c[i]));
    const auto sol = solve_left(coords_, target);
    if (!sol) throw std::logic_error("factor_xn1: coefficient does not lie in R");
    std::vector<std::int64_t> c;
    for (const auto& v : *sol) c.push_back(v.c[0]);
    return r_.from_coeffs(c);
  }

 private:
  const GaloisRing& r_;
  GaloisRing base_;
  ChainMat coords_;
  int degree_ = 0;
};

}  // namespace

FactorBasisPtr FactorBasis::build(ContextPtr ctx, int n) {
  if (n < 1) throw std::invalid_argument("factor_xn1: n must be positive");
  if (n % ctx->p() == 0)
    throw LengthNotCoprime("length n = " + std::to_string(n) + " is divisible by p = " + std::to_string(ctx->p()) +
                           "; gcd(n, p) = 1 is required");
  const GaloisRing& ring = ctx->ring();
  auto cosets = cyclotomic_cosets(ctx->q(), n);
  const int t = multiplicative_order(ctx->q(), n);

  std::shared_ptr<FactorBasis> basis(new FactorBasis());
  basis->ctx_ = ctx;
  basis->n_ = n;
  basis->xn1_ = Poly::xn_minus_1(ring, n);

  std::vector<std::pair<Poly, std::vector<int>>> found;
  if (t == 1 && ring.degree() == 1) {
    // All roots already live in Z_{p^e}.
    const GrElem gen = ring.teichmuller_generator();
    const GrElem omega = ring.pow(gen, static_cast<std::uint64_t>((ctx->q() - 1) / n));
    for (const auto& coset : cosets) {
      Poly f = Poly::constant(ring.one());
      for (int i : coset) f = poly::mul(ring, f, Poly({ring.neg(ring.pow(omega, static_cast<std::uint64_t>(i))), ring.one()}));
      found.emplace_back(std::move(f), coset);
    }
  } else {
    const GaloisRing split(ctx->p(), ctx->e(), ring.degree() * t);
    GrElem rho = split.zero();
    if (ring.degree() > 1) {
      // A root of the defining polynomial of R among the Teichmuller elements of T.
      bool ok = false;
      for (const GrElem& cand : split.teichmuller_set()) {
        GrElem acc = split.zero();
        const auto h = ring.defining_poly();
        for (int k = static_cast<int>(h.size()) - 1; k >= 0; --k) acc = split.add(split.mul(acc, cand), split.from_int(h[k]));
        if (split.is_zero(acc)) {
          rho = cand;
          ok = true;
          break;
        }
      }
      if (!ok) throw std::logic_error("factor_xn1: R does not embed in the splitting ring");
    }
    const Pullback pull(ring, split, rho);
    const GrElem gen = split.teichmuller_generator();
    const GrElem omega = split.pow(gen, static_cast<std::uint64_t>((split.residue_size() - 1) / n));
    for (const auto& coset : cosets) {
      Poly f = Poly::constant(split.one());
      for (int i : coset)
        f = poly::mul(split, f, Poly({split.neg(split.pow(omega, static_cast<std::uint64_t>(i))), split.one()}));
      std::vector<GrElem> coeffs;
      for (const auto& c : f.coeffs()) coeffs.push_back(pull(c));
      found.emplace_back(Poly(std::move(coeffs)), coset);
    }
  }

  std::stable_sort(found.begin(), found.end(), [](const auto& a, const auto& b) {
    if (a.first.degree() != b.first.degree()) return a.first.degree() < b.first.degree();
    return a.second.front() < b.second.front();
  });
  if (found.size() > 62) throw std::invalid_argument("factor_xn1: too many irreducible factors");
  Poly product = Poly::constant(ring.one());
  for (auto& [f, coset] : found) {
    product = poly::mul(ring, product, f);
    basis->factors_.push_back(std::move(f));
    basis->cosets_.push_back(std::move(coset));
  }
  if (product != basis->xn1_) throw std::logic_error("factor_xn1: product of factors differs from x^n - 1");
  if (ctx->e() > 1) {
    auto res = std::shared_ptr<FactorBasis>(new FactorBasis());
    res->ctx_ = ctx->residue_context();
    res->n_ = n;
    res->xn1_ = Poly::xn_minus_1(res->ring(), n);
    res->cosets_ = basis->cosets_;
    for (const auto& f : basis->factors_) res->factors_.push_back(poly::change_ring(ring, res->ring(), f));
    basis->residue_ = std::move(res);
  }
  return basis;
}

std::vector<Poly> FactorBasis::residue_factors() const {
  std::vector<Poly> out;
  for (const auto& f : factors_) {
    std::vector<GrElem> c;
    for (const auto& x : f.coeffs()) c.push_back(ring().residue(x));
    out.emplace_back(std::move(c));
  }
  return out;
}

Divisor FactorBasis::divisor(std::uint64_t mask) const {
  if ((mask & ~full_mask()) != 0) throw NotADivisor("divisor mask out of range");
  Poly p = Poly::constant(ring().one());
  for (std::size_t k = 0; k < factors_.size(); ++k)
    if (mask & (std::uint64_t{1} << k)) p = poly::mul(ring(), p, factors_[k]);
  return {mask, std::move(p)};
}

std::vector<Divisor> FactorBasis::all_divisors() const {
  std::vector<Divisor> out;
  for (std::uint64_t mask = 0; mask <= full_mask(); ++mask) out.push_back(divisor(mask));
  return out;
}

std::optional<Divisor> FactorBasis::identify(const Poly& a) const {
  if (!poly::is_monic(ring(), a)) return std::nullopt;
  std::uint64_t mask = 0;
  for (std::size_t k = 0; k < factors_.size(); ++k)
    if (poly::divides(ring(), factors_[k], a)) mask |= std::uint64_t{1} << k;
  Divisor d = divisor(mask);
  if (d.poly != a) return std::nullopt;
  return d;
}

Divisor FactorBasis::require_divisor(const Poly& a) const {
  auto d = identify(a);
  if (!d) throw NotADivisor(poly::format(ring(), a) + " is not a monic divisor of x^" + std::to_string(n_) + "-1");
  return *d;
}

Divisor FactorBasis::reciprocal(const Divisor& a) const {
  return require_divisor(poly::monic_reciprocal(ring(), a.poly));
}

}  // namespace chainacp
