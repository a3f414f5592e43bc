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

#ifndef CHAINACP_TRACE_DUALITY_HPP
#define CHAINACP_TRACE_DUALITY_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "chainacp/additive_codes.hpp"

namespace chainacp {

/// 2 diag(I_n, theta I_n): the trace form on flattened coordinates.
ChainMat trace_gram(const ExtensionContext& ctx, int n);

/// {u : Tr(u * c) = 0 for all c in m}, computed as a row kernel.
RawModule trace_dual(const RawModule& m);
/// Canonical trace dual.
AdditiveCyclicCode trace_dual(const AdditiveCyclicCode& c);

/// (rec((x^n-1)/f), 0, rec((x^n-1)/g)). Throws ClosedFormInapplicable when the twist is nonzero.
AdditiveCyclicCode closed_form_dual(const AdditiveCyclicCode& c);

enum class DualCondition { E1, E2, E3, E4, R1, R2, R3, Lstar, E1res, Deg };

const char* to_string(DualCondition c) noexcept;

struct DualReport {
  bool verdict = false;
  std::vector<DualCondition> failed;
  /// First (i, j) violating an E-condition, in condition order.
  std::optional<std::pair<int, int>> witness;
  /// Interpretation notes, e.g. that the primed split was derived from (f', g').
  std::vector<std::string> notes;
};

/// Checks whether `dual` is the trace dual of `c`: E1-E4 by inner products over all
/// (i, j), R1-R3 and Lstar by divisibility, E1res for j = 0, and the degree identity
/// deg f + deg f' + deg g + deg g' = 2n (reported as Deg). Throws LevelMismatch.
DualReport check_dual_pair(const AdditiveCyclicCode& c, const AdditiveCyclicCode& dual);

/// x^n - 1 divides a b. Throws ShapeError when deg a or deg b exceeds n - 1.
bool lemma_xn1_equiv(const GaloisRing& ring, const Poly& a, const Poly& b, int n);

struct LatticeLaws {
  bool sum_law = false;           ///< (C + D)^perp = C^perp cap D^perp
  bool intersection_law = false;  ///< C^perp + D^perp = (C cap D)^perp
  bool holds() const noexcept { return sum_law && intersection_law; }
};

LatticeLaws dual_lattice_laws(const RawModule& c, const RawModule& d);
inline LatticeLaws dual_lattice_laws(const AdditiveCyclicCode& c, const AdditiveCyclicCode& d) {
  return dual_lattice_laws(c.raw(), d.raw());
}

}  // namespace chainacp

#endif  // CHAINACP_TRACE_DUALITY_HPP
