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

// Dense polynomials over Z/NZ used while constructing Galois rings.

#ifndef CHAINACP_SRC_ZPOLY_HPP
#define CHAINACP_SRC_ZPOLY_HPP

#include <cstdint>
#include <vector>

namespace chainacp::zpoly {

using ZPoly = std::vector<std::int64_t>;

void trim(ZPoly& a);
int degree(const ZPoly& a);
ZPoly reduce(ZPoly a, std::int64_t mod);
ZPoly add(const ZPoly& a, const ZPoly& b, std::int64_t mod);
ZPoly sub(const ZPoly& a, const ZPoly& b, std::int64_t mod);
ZPoly mul(const ZPoly& a, const ZPoly& b, std::int64_t mod);
ZPoly scale(const ZPoly& a, std::int64_t k, std::int64_t mod);
/// Division by a polynomial whose leading coefficient is a unit mod `mod`.
void divmod(const ZPoly& a, const ZPoly& b, std::int64_t mod, ZPoly& quot, ZPoly& rem);
ZPoly mulmod(const ZPoly& a, const ZPoly& b, const ZPoly& m, std::int64_t mod);
ZPoly powmod(ZPoly base, std::uint64_t k, const ZPoly& m, std::int64_t mod);

std::int64_t inv_mod(std::int64_t a, std::int64_t mod);

/// s, t with s*a + t*b = 1 over F_p. a and b must be coprime.
void ext_gcd_field(const ZPoly& a, const ZPoly& b, std::int64_t p, ZPoly& s, ZPoly& t);

/// Monic primitive polynomial of the given degree over F_p, smallest in the
/// order that compares coefficient sequences from the constant term upward.
ZPoly smallest_primitive(std::int64_t p, int degree);

/// Lifts the monic factor `factor_mod_p` of `target` (monic, integer coefficients,
/// squarefree mod p) to the unique monic factor of `target` over Z/p^e.
ZPoly hensel_lift_factor(const ZPoly& target, const ZPoly& factor_mod_p, std::int64_t p, int e);

}  // namespace chainacp::zpoly

#endif  // CHAINACP_SRC_ZPOLY_HPP
