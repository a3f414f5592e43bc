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

#include "chainacp/chain_linalg.hpp"

#include <sstream>

#include "chainacp/errors.hpp"
#include "chainacp/ring_tower.hpp"

namespace chainacp {

ChainMat::ChainMat(const GaloisRing& ring, std::size_t rows, std::size_t cols)
    : ring_(&ring), rows_(rows), cols_(cols), data_(rows * cols) {}

ChainMat::ChainMat(const GaloisRing& ring, std::size_t cols, const std::vector<std::vector<GrElem>>& rows)
    : ring_(&ring), rows_(0), cols_(cols) {
  for (const auto& r : rows) append_row(r);
}

ChainMat ChainMat::identity(const GaloisRing& ring, std::size_t n) {
  ChainMat m(ring, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = ring.one();
  return m;
}

ChainMat ChainMat::from_ints(const GaloisRing& ring, const std::vector<std::vector<std::int64_t>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  ChainMat m(ring, rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw ShapeError("from_ints: ragged rows");
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = ring.from_int(rows[i][j]);
  }
  return m;
}

void ChainMat::append_row(std::span<const GrElem> r) {
  if (r.size() != cols_) throw ShapeError("append_row: expected " + std::to_string(cols_) + " entries");
  data_.insert(data_.end(), r.begin(), r.end());
  ++rows_;
}

ChainMat ChainMat::transpose() const {
  ChainMat t(*ring_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

ChainMat ChainMat::multiply(const ChainMat& other) const {
  if (cols_ != other.rows_) throw ShapeError("multiply: inner dimensions differ");
  ChainMat out(*ring_, rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const GrElem& a = at(i, k);
      if (ring_->is_zero(a)) continue;
      for (std::size_t j = 0; j < other.cols_; ++j)
        out.at(i, j) = ring_->add(out.at(i, j), ring_->mul(a, other.at(k, j)));
    }
  return out;
}

ChainMat ChainMat::vstack(const ChainMat& other) const {
  if (cols_ != other.cols_) throw ShapeError("vstack: column counts differ");
  ChainMat out = *this;
  out.data_.insert(out.data_.end(), other.data_.begin(), other.data_.end());
  out.rows_ += other.rows_;
  return out;
}

ChainMat ChainMat::hstack(const ChainMat& other) const {
  if (rows_ != other.rows_) throw ShapeError("hstack: row counts differ");
  ChainMat out(*ring_, rows_, cols_ + other.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out.at(i, j) = at(i, j);
    for (std::size_t j = 0; j < other.cols_; ++j) out.at(i, cols_ + j) = other.at(i, j);
  }
  return out;
}

ChainMat ChainMat::column_block(std::size_t first, std::size_t count) const {
  if (first + count > cols_) throw ShapeError("column_block: out of range");
  ChainMat out(*ring_, rows_, count);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < count; ++j) out.at(i, j) = at(i, first + j);
  return out;
}

ChainMat ChainMat::residue() const {
  ChainMat out = *this;
  for (auto& x : out.data_) x = ring_->residue(x);
  return out;
}

bool ChainMat::is_zero() const noexcept {
  for (const auto& x : data_)
    if (!ring_->is_zero(x)) return false;
  return true;
}

std::string ChainMat::format() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < rows_; ++i) {
    os << '[';
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? " " : "") << ring_->format(at(i, j));
    os << "]\n";
  }
  return os.str();
}

namespace {

struct WorkRow {
  std::vector<GrElem> vals;
  std::vector<GrElem> trans;
};

bool all_zero(const GaloisRing& ring, const std::vector<GrElem>& v) {
  for (const auto& x : v)
    if (!ring.is_zero(x)) return false;
  return true;
}

// row -= t * src, on both parts.
void axpy(const GaloisRing& ring, WorkRow& row, const GrElem& t, const WorkRow& src, bool with_transform) {
  for (std::size_t k = 0; k < row.vals.size(); ++k)
    if (!ring.is_zero(src.vals[k])) row.vals[k] = ring.sub(row.vals[k], ring.mul(t, src.vals[k]));
  if (with_transform)
    for (std::size_t k = 0; k < row.trans.size(); ++k)
      if (!ring.is_zero(src.trans[k])) row.trans[k] = ring.sub(row.trans[k], ring.mul(t, src.trans[k]));
}

void scale_row(const GaloisRing& ring, WorkRow& row, const GrElem& t, bool with_transform) {
  for (auto& x : row.vals) x = ring.mul(t, x);
  if (with_transform)
    for (auto& x : row.trans) x = ring.mul(t, x);
}

HowellResult howell_impl(const ChainMat& m, bool with_transform) {
  const GaloisRing& ring = m.ring();
  const std::size_t cols = m.cols();
  const int e = ring.e();

  std::vector<WorkRow> work;
  work.reserve(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    WorkRow r;
    r.vals.assign(m.row(i).begin(), m.row(i).end());
    if (with_transform) {
      r.trans.assign(m.rows(), ring.zero());
      r.trans[i] = ring.one();
    }
    if (!all_zero(ring, r.vals)) work.push_back(std::move(r));
  }

  std::vector<WorkRow> pivots;
  std::vector<std::size_t> pivot_cols;
  std::vector<int> pivot_vals;
  for (std::size_t j = 0; j < cols && !work.empty(); ++j) {
    std::size_t best = work.size();
    int best_val = e;
    for (std::size_t i = 0; i < work.size(); ++i) {
      const int v = ring.valuation(work[i].vals[j]);
      if (v < best_val) {
        best_val = v;
        best = i;
        if (v == 0) break;
      }
    }
    if (best == work.size()) continue;

    WorkRow piv = std::move(work[best]);
    work.erase(work.begin() + static_cast<std::ptrdiff_t>(best));
    const GrElem unit = ring.divide_by_p_power(piv.vals[j], best_val);
    scale_row(ring, piv, ring.inv(unit), with_transform);

    std::vector<WorkRow> next;
    next.reserve(work.size() + 1);
    for (auto& w : work) {
      if (!ring.is_zero(w.vals[j])) axpy(ring, w, ring.divide_by_p_power(w.vals[j], best_val), piv, with_transform);
      if (!all_zero(ring, w.vals)) next.push_back(std::move(w));
    }
    if (best_val > 0) {
      // p^(e-v) * pivot row vanishes in column j but may not elsewhere.
      WorkRow ann = piv;
      std::int64_t factor = 1;
      for (int k = 0; k < e - best_val; ++k) factor *= ring.p();
      scale_row(ring, ann, ring.from_int(factor), with_transform);
      if (!all_zero(ring, ann.vals)) next.push_back(std::move(ann));
    }
    work = std::move(next);
    pivots.push_back(std::move(piv));
    pivot_cols.push_back(j);
    pivot_vals.push_back(best_val);
  }

  for (std::size_t i = 0; i < pivots.size(); ++i) {
    const std::size_t j = pivot_cols[i];
    const int v = pivot_vals[i];
    for (std::size_t k = 0; k < i; ++k) {
      const GrElem& x = pivots[k].vals[j];
      if (ring.is_zero(x)) continue;
      const GrElem rem = ring.reduce_mod_p_power(x, v);
      if (rem == x) continue;
      const GrElem t = ring.divide_by_p_power(ring.sub(x, rem), v);
      axpy(ring, pivots[k], t, pivots[i], with_transform);
    }
  }

  HowellResult out{ChainMat(ring, 0, cols), ChainMat(ring, 0, with_transform ? m.rows() : 0)};
  for (const auto& pr : pivots) {
    out.form.append_row(pr.vals);
    if (with_transform) out.transform.append_row(pr.trans);
  }
  return out;
}

}  // namespace

ChainMat howell_form(const ChainMat& m) { return howell_impl(m, false).form; }

HowellResult howell(const ChainMat& m) { return howell_impl(m, true); }

std::vector<std::size_t> pivot_columns(const ChainMat& h) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < h.rows(); ++i) {
    std::size_t j = 0;
    while (j < h.cols() && h.ring().is_zero(h.at(i, j))) ++j;
    out.push_back(j);
  }
  return out;
}

namespace {

// Reduces v against the rows of h whose pivot lies before `limit`. Returns false
// as soon as some pivot entry is not divisible by the pivot.
bool reduce_against(const ChainMat& h, std::vector<GrElem>& v, std::size_t limit) {
  const GaloisRing& ring = h.ring();
  const auto pcols = pivot_columns(h);
  for (std::size_t i = 0; i < h.rows(); ++i) {
    const std::size_t j = pcols[i];
    if (j >= limit) break;
    if (ring.is_zero(v[j])) continue;
    const int pv = ring.valuation(h.at(i, j));
    if (ring.valuation(v[j]) < pv) return false;
    const GrElem t = ring.divide_by_p_power(v[j], pv);
    for (std::size_t k = j; k < h.cols(); ++k)
      if (!ring.is_zero(h.at(i, k))) v[k] = ring.sub(v[k], ring.mul(t, h.at(i, k)));
  }
  for (std::size_t k = 0; k < limit; ++k)
    if (!ring.is_zero(v[k])) return false;
  return true;
}

}  // namespace

bool howell_contains(const ChainMat& h, std::span<const GrElem> v) {
  if (v.size() != h.cols()) throw ShapeError("howell_contains: length mismatch");
  std::vector<GrElem> w(v.begin(), v.end());
  return reduce_against(h, w, h.cols());
}

ChainMat row_kernel(const ChainMat& m) {
  const GaloisRing& ring = m.ring();
  const ChainMat aug = m.hstack(ChainMat::identity(ring, m.rows()));
  const ChainMat h = howell_form(aug);
  const auto pcols = pivot_columns(h);
  ChainMat out(ring, 0, m.rows());
  for (std::size_t i = 0; i < h.rows(); ++i) {
    if (pcols[i] < m.cols()) continue;
    out.append_row(h.row(i).subspan(m.cols()));
  }
  return howell_form(out);
}

std::optional<std::vector<GrElem>> solve_left(const ChainMat& m, std::span<const GrElem> target) {
  if (target.size() != m.cols()) throw ShapeError("solve_left: target length mismatch");
  const GaloisRing& ring = m.ring();
  const ChainMat h = howell_form(m.hstack(ChainMat::identity(ring, m.rows())));
  std::vector<GrElem> v(target.begin(), target.end());
  v.resize(m.cols() + m.rows(), ring.zero());
  if (!reduce_against(h, v, m.cols())) return std::nullopt;
  std::vector<GrElem> x(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) x[i] = ring.neg(v[m.cols() + i]);
  return x;
}

RankProfile rank_profile(const ChainMat& m) {
  const ChainMat h = howell_form(m);
  const GaloisRing& ring = m.ring();
  RankProfile out;
  const auto pcols = pivot_columns(h);
  for (std::size_t i = 0; i < h.rows(); ++i) {
    const int v = ring.valuation(h.at(i, pcols[i]));
    out.pivot_vals.push_back(v);
    if (v == 0) ++out.free_rank;
    out.log_cardinality += static_cast<std::uint64_t>(ring.degree()) * static_cast<std::uint64_t>(ring.e() - v);
  }
  return out;
}

std::optional<ChainMat> free_basis(const ChainMat& m) {
  const GaloisRing& ring = m.ring();
  const ChainMat h = howell_form(m);
  ChainMat scaled = h;
  const GrElem p = ring.from_int(ring.p());
  for (std::size_t i = 0; i < scaled.rows(); ++i)
    for (std::size_t j = 0; j < scaled.cols(); ++j) scaled.at(i, j) = ring.mul(p, scaled.at(i, j));
  ChainMat cur = howell_form(scaled);
  std::uint64_t cur_log = rank_profile(cur).log_cardinality;
  ChainMat basis(ring, 0, m.cols());
  for (std::size_t i = 0; i < h.rows(); ++i) {
    ChainMat next = cur;
    next.append_row(h.row(i));
    next = howell_form(next);
    const std::uint64_t log = rank_profile(next).log_cardinality;
    if (log == cur_log) continue;
    basis.append_row(h.row(i));
    cur = std::move(next);
    cur_log = log;
  }
  const std::uint64_t full = rank_profile(h).log_cardinality;
  const auto per_row = static_cast<std::uint64_t>(ring.degree()) * static_cast<std::uint64_t>(ring.e());
  if (full != per_row * basis.rows()) return std::nullopt;
  return basis;
}

bool is_invertible(const ChainMat& m) {
  if (m.rows() != m.cols()) throw ShapeError("is_invertible: matrix is " + std::to_string(m.rows()) + "x" +
                                             std::to_string(m.cols()) + ", not square");
  return howell_form(m) == ChainMat::identity(m.ring(), m.rows());
}

bool is_invertible_over_s(const ExtensionContext& ctx, const std::vector<std::vector<SElem>>& m) {
  const std::size_t n = m.size();
  for (const auto& r : m)
    if (r.size() != n) throw ShapeError("is_invertible_over_s: matrix is not square");
  const GaloisRing& ring = ctx.ring();
  ChainMat big(ring, 2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      // (u + v mu)(a + b mu) = (ua + theta vb) + (ub + va) mu
      const SElem& x = m[i][j];
      big.at(2 * i, 2 * j) = x.a;
      big.at(2 * i, 2 * j + 1) = x.b;
      big.at(2 * i + 1, 2 * j) = ring.mul(ctx.theta(), x.b);
      big.at(2 * i + 1, 2 * j + 1) = x.a;
    }
  return is_invertible(big);
}

ChainMat module_sum(const ChainMat& a, const ChainMat& b) { return howell_form(a.vstack(b)); }

ChainMat module_intersect(const ChainMat& a, const ChainMat& b) {
  if (a.cols() != b.cols()) throw ShapeError("module_intersect: column counts differ");
  const ChainMat k = row_kernel(a.vstack(b));
  return howell_form(k.column_block(0, a.rows()).multiply(a));
}

}  // namespace chainacp
