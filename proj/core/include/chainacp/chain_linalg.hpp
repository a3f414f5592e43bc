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

#ifndef CHAINACP_CHAIN_LINALG_HPP
#define CHAINACP_CHAIN_LINALG_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "chainacp/galois_ring.hpp"

namespace chainacp {

class ExtensionContext;
struct SElem;

/// Dense row-major matrix over a Galois ring. The ring must outlive the matrix.
class ChainMat {
 public:
  ChainMat(const GaloisRing& ring, std::size_t rows, std::size_t cols);
  ChainMat(const GaloisRing& ring, std::size_t cols, const std::vector<std::vector<GrElem>>& rows);

  static ChainMat identity(const GaloisRing& ring, std::size_t n);
  /// Integer entries, mainly for tests.
  static ChainMat from_ints(const GaloisRing& ring, const std::vector<std::vector<std::int64_t>>& rows);

  const GaloisRing& ring() const noexcept { return *ring_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  const GrElem& at(std::size_t i, std::size_t j) const noexcept { return data_[i * cols_ + j]; }
  GrElem& at(std::size_t i, std::size_t j) noexcept { return data_[i * cols_ + j]; }
  std::span<const GrElem> row(std::size_t i) const noexcept { return {data_.data() + i * cols_, cols_}; }

  void append_row(std::span<const GrElem> r);
  ChainMat transpose() const;
  ChainMat multiply(const ChainMat& other) const;
  /// Rows of *this followed by rows of other.
  ChainMat vstack(const ChainMat& other) const;
  /// Columns of *this followed by columns of other.
  ChainMat hstack(const ChainMat& other) const;
  /// Columns [first, first + count).
  ChainMat column_block(std::size_t first, std::size_t count) const;
  /// Entrywise residue mod p.
  ChainMat residue() const;
  bool is_zero() const noexcept;

  std::string format() const;

  friend bool operator==(const ChainMat& a, const ChainMat& b) noexcept {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  const GaloisRing* ring_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<GrElem> data_;
};

struct HowellResult {
  ChainMat form;       ///< Howell form H (zero rows removed).
  ChainMat transform;  ///< U with U * M = H.
};

struct RankProfile {
  std::size_t free_rank = 0;       ///< number of unit pivots
  std::vector<int> pivot_vals;     ///< p-valuation of each pivot, top to bottom
  std::uint64_t log_cardinality = 0;  ///< |row module| = p^log_cardinality

  bool is_free() const noexcept {
    for (int v : pivot_vals)
      if (v != 0) return false;
    return true;
  }
  friend bool operator==(const RankProfile&, const RankProfile&) = default;
};

/// Howell normal form of the row module of m: pivots are exact powers p^v,
/// entries above each pivot are reduced mod the pivot, and for every column j
/// the rows with pivot column >= j generate every module element vanishing on
/// columns < j. Two matrices have the same row module iff their forms are equal.
ChainMat howell_form(const ChainMat& m);
HowellResult howell(const ChainMat& m);

/// Pivot column of each row of a Howell form.
std::vector<std::size_t> pivot_columns(const ChainMat& howell);

/// Membership of v in the row module of a matrix already in Howell form.
bool howell_contains(const ChainMat& howell, std::span<const GrElem> v);

/// Rows generating {x : x * m = 0}, in Howell form.
ChainMat row_kernel(const ChainMat& m);

/// Some x with x * m = target, or nullopt.
std::optional<std::vector<GrElem>> solve_left(const ChainMat& m, std::span<const GrElem> target);

RankProfile rank_profile(const ChainMat& m);

/// A basis of the row module when it is free, else nullopt. A free module may have
/// non-unit Howell pivots (R (3, 1) over Z_9), so freeness is decided by comparing
/// |M| with |R|^dim(M / pM); the basis lifts a basis of M / pM.
std::optional<ChainMat> free_basis(const ChainMat& m);

/// Square matrix invertibility over the chain ring (unit determinant, equivalently
/// invertible residue matrix). Throws ShapeError when not square.
bool is_invertible(const ChainMat& m);

/// Invertibility of a square matrix over S, via the R-linear 2n x 2n block matrix
/// of right multiplication. Throws ShapeError when not square.
bool is_invertible_over_s(const ExtensionContext& ctx, const std::vector<std::vector<SElem>>& m);

/// Howell form of the sum of the two row modules.
ChainMat module_sum(const ChainMat& a, const ChainMat& b);
/// Howell form of the intersection of the two row modules.
ChainMat module_intersect(const ChainMat& a, const ChainMat& b);

}  // namespace chainacp

#endif  // CHAINACP_CHAIN_LINALG_HPP
