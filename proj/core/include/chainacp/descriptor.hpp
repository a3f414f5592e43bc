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

#ifndef CHAINACP_DESCRIPTOR_HPP
#define CHAINACP_DESCRIPTOR_HPP

#include <string>

#include "chainacp/acp.hpp"
#include "chainacp/trace_duality.hpp"

namespace chainacp {

/// Polynomial over R from "[c0, c1, ...]" (ascending; an entry is an integer or, for
/// m > 1, a list of integers in the y-basis) or, for m = 1, from "x^2+4x+8" style text.
/// Throws ParseError.
Poly parse_poly(const GaloisRing& ring, const std::string& text);

/// Code from {"p","e","m","n","f","r","g"}; "r0" may replace "r" for the twisted form
/// and "r" defaults to 0. f and g may be coefficient lists or strings. Throws ParseError
/// and the validation errors of AdditiveCyclicCode::make.
AdditiveCyclicCode code_from_json(const std::string& json);
/// Same, reusing an existing factor basis; p, e, m, n must match it.
AdditiveCyclicCode code_from_json(const std::string& json, const FactorBasisPtr& basis);

/// {"p","e","m","n","f","r","g"} with ascending coefficient lists; "r0" replaces "r"
/// when f does not divide the twist.
std::string code_to_json(const AdditiveCyclicCode& c);
/// Descriptor plus "rank", "log_p_cardinality", "f_divides_r0" and generator words.
std::string code_info_json(const AdditiveCyclicCode& c);

/// {"verdict","failed","witness","notes"}.
std::string dual_report_json(const DualReport& r);
/// {"definitional","polynomial","matrix","projection","agree"[,"matrix_diagnostic"]}.
std::string acp_verdict_json(const AcpVerdict& v);
/// One JSON Lines record; fields in a fixed order.
std::string audit_record_json(const AuditRecord& r);

}  // namespace chainacp

#endif  // CHAINACP_DESCRIPTOR_HPP
