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

#ifndef CHAINACP_ERRORS_HPP
#define CHAINACP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace chainacp {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Characteristic 2 or a non-prime residue characteristic was requested.
class UnsupportedCharacteristic : public Error {
 public:
  using Error::Error;
};

/// Operands come from different contexts or different lengths.
class LevelMismatch : public Error {
 public:
  using Error::Error;
};

class NotAUnit : public Error {
 public:
  NotAUnit(const std::string& what, int valuation) : Error(what), valuation_(valuation) {}
  /// p-adic valuation of the offending element (e for zero).
  int valuation() const noexcept { return valuation_; }

 private:
  int valuation_;
};

class NonMonicDivisor : public Error {
 public:
  using Error::Error;
};

/// gcd(n, p) != 1; the repeated-root case is unsupported.
class LengthNotCoprime : public Error {
 public:
  using Error::Error;
};

/// A polynomial expected to divide x^n - 1 does not.
class NotADivisor : public Error {
 public:
  using Error::Error;
};

/// The R-span of a generator set is not a free R-module.
class NotFree : public Error {
 public:
  using Error::Error;
};

/// Free shift-closed module with no <f + mu r0, mu g> generator form.
class NoCanonicalTriple : public Error {
 public:
  using Error::Error;
};

/// A canonical triple violates one of its structural constraints.
class InvalidCode : public Error {
 public:
  using Error::Error;
};

class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

class ClosedFormInapplicable : public Error {
 public:
  using Error::Error;
};

class ShapeError : public Error {
 public:
  using Error::Error;
};

/// Raised when a code has no nonzero word but a distance was requested.
class ZeroCode : public Error {
 public:
  using Error::Error;
};

class NotAcp : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace chainacp

#endif  // CHAINACP_ERRORS_HPP
