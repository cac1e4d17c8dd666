// Copyright 2026 The gf2crit Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "gf2crit/gf2.h"

#include <algorithm>
#include <string>

#include "gf2crit/errors.h"

namespace gf2crit {

void check_dim(int dim) {
  if (dim < 0 || dim > kMaxDim) {
    throw Error(ErrorCode::kDimensionTooLarge,
                "dimension " + std::to_string(dim) + " outside [0, " +
                    std::to_string(kMaxDim) + "]");
  }
}

std::string to_bit_string(Mask bits, int dim) {
  std::string out(static_cast<std::size_t>(dim), '0');
  for (int i = 1; i <= dim; ++i) {
    if (bits & coordinate_bit(dim, i)) out[i - 1] = '1';
  }
  return out;
}

Mask parse_bit_string(std::string_view text) {
  check_dim(static_cast<int>(text.size()));
  Mask bits = 0;
  for (char ch : text) {
    if (ch != '0' && ch != '1') {
      throw Error(ErrorCode::kInvalidArgument,
                  "bit string may contain only 0 and 1: '" +
                      std::string(text) + "'");
    }
    bits = (bits << 1) | static_cast<Mask>(ch == '1');
  }
  return bits;
}

Gf2Vector::Gf2Vector(int dim, Mask bits) : dim_(dim), bits_(bits) {
  check_dim(dim);
  if ((bits & ~low_mask(dim)) != 0) {
    throw Error(ErrorCode::kInvalidArgument,
                "vector has bits outside dimension " + std::to_string(dim));
  }
}

Gf2Vector Gf2Vector::unit(int dim, int coord) {
  if (coord < 1 || coord > dim) {
    throw Error(ErrorCode::kInvalidArgument,
                "coordinate " + std::to_string(coord) + " outside 1.." +
                    std::to_string(dim));
  }
  return Gf2Vector(dim, coordinate_bit(dim, coord));
}

Gf2Vector Gf2Vector::from_string(std::string_view text) {
  return Gf2Vector(static_cast<int>(text.size()), parse_bit_string(text));
}

Gf2Vector operator+(const Gf2Vector& a, const Gf2Vector& b) {
  require(a.dim_ == b.dim_, ErrorCode::kDimensionMismatch,
          "adding vectors of different dimension");
  return Gf2Vector(a.dim_, a.bits_ ^ b.bits_);
}

bool dot(const Gf2Vector& a, const Gf2Vector& b) {
  require(a.dim_ == b.dim_, ErrorCode::kDimensionMismatch,
          "inner product of vectors of different dimension");
  return dot(a.bits_, b.bits_);
}

Gf2Matrix::Gf2Matrix(int ncols, std::vector<Mask> rows)
    : ncols_(ncols), rows_(std::move(rows)) {
  check_dim(ncols);
  for (Mask r : rows_) {
    if ((r & ~low_mask(ncols)) != 0) {
      throw Error(ErrorCode::kInvalidArgument,
                  "matrix row has bits outside " + std::to_string(ncols) +
                      " columns");
    }
  }
}

Gf2Matrix Gf2Matrix::identity(int n) {
  std::vector<Mask> rows;
  for (int i = 1; i <= n; ++i) rows.push_back(coordinate_bit(n, i));
  return Gf2Matrix(n, std::move(rows));
}

Gf2Matrix Gf2Matrix::zero(int nrows, int ncols) {
  return Gf2Matrix(ncols, std::vector<Mask>(static_cast<std::size_t>(nrows), 0));
}

Gf2Matrix Gf2Matrix::from_strings(const std::vector<std::string>& rows) {
  if (rows.empty()) return Gf2Matrix(0);
  std::vector<Mask> masks;
  const int ncols = static_cast<int>(rows.front().size());
  for (const std::string& r : rows) {
    require(static_cast<int>(r.size()) == ncols, ErrorCode::kDimensionMismatch,
            "matrix rows of unequal length");
    masks.push_back(parse_bit_string(r));
  }
  return Gf2Matrix(ncols, std::move(masks));
}

Mask Gf2Matrix::apply(Mask x) const {
  Mask out = 0;
  for (Mask r : rows_) out = (out << 1) | static_cast<Mask>(dot(r, x));
  return out;
}

Gf2Vector Gf2Matrix::apply(const Gf2Vector& x) const {
  require(x.dim() == ncols_, ErrorCode::kDimensionMismatch,
          "matrix-vector product with mismatched dimension");
  return Gf2Vector(nrows(), apply(x.bits()));
}

std::vector<Mask> rref_rows(std::span<const Mask> rows) {
  std::vector<Mask> basis;
  for (Mask r : rows) {
    for (Mask b : basis) {
      if (r & top_bit(b)) r ^= b;
    }
    if (r == 0) continue;
    const Mask pivot = top_bit(r);
    for (Mask& b : basis) {
      if (b & pivot) b ^= r;
    }
    basis.insert(std::upper_bound(basis.begin(), basis.end(), r,
                                  [](Mask a, Mask b) { return a > b; }),
                 r);
  }
  return basis;
}

int rank_of(std::span<const Mask> rows) {
  return static_cast<int>(rref_rows(rows).size());
}

int rank(const Gf2Matrix& m) { return rank_of(m.rows()); }

Gf2Matrix rref(const Gf2Matrix& m) {
  return Gf2Matrix(m.ncols(), rref_rows(m.rows()));
}

Subspace::Subspace(int ambient_dim, std::vector<Mask> basis)
    : ambient_dim_(ambient_dim), basis_(std::move(basis)) {
  for (Mask b : basis_) pivot_mask_ |= top_bit(b);
}

Subspace Subspace::span(int ambient_dim, std::span<const Mask> generators) {
  check_dim(ambient_dim);
  for (Mask g : generators) {
    if ((g & ~low_mask(ambient_dim)) != 0) {
      throw Error(ErrorCode::kInvalidArgument,
                  "generator has bits outside dimension " +
                      std::to_string(ambient_dim));
    }
  }
  return Subspace(ambient_dim, rref_rows(generators));
}

Subspace Subspace::full(int ambient_dim) {
  return span(ambient_dim, Gf2Matrix::identity(ambient_dim).rows());
}

Subspace Subspace::zero(int ambient_dim) {
  check_dim(ambient_dim);
  return Subspace(ambient_dim, {});
}

Mask Subspace::reduce(Mask x) const {
  for (Mask b : basis_) {
    if (x & top_bit(b)) x ^= b;
  }
  return x;
}

Mask Subspace::lift(Mask coords) const {
  Mask out = 0;
  const int d = dim();
  for (int i = 0; i < d; ++i) {
    if (coords & (Mask{1} << (d - 1 - i))) out ^= basis_[i];
  }
  return out;
}

Subspace Subspace::intersect_hyperplane(Mask normal) const {
  Subspace complement = orthogonal_complement(*this);
  std::vector<Mask> rows(complement.basis().begin(), complement.basis().end());
  rows.push_back(normal);
  return null_space(Gf2Matrix(ambient_dim_, std::move(rows)));
}

std::vector<Mask> Subspace::elements() const {
  std::vector<Mask> out;
  out.reserve(size());
  for (std::uint64_t c = 0; c < size(); ++c) out.push_back(lift(static_cast<Mask>(c)));
  std::sort(out.begin(), out.end());
  return out;
}

Subspace null_space(const Gf2Matrix& m) {
  const int n = m.ncols();
  const std::vector<Mask> reduced = rref_rows(m.rows());
  Mask pivots = 0;
  for (Mask r : reduced) pivots |= top_bit(r);
  std::vector<Mask> basis;
  Mask free_columns = low_mask(n) & ~pivots;
  while (free_columns != 0) {
    const Mask f = free_columns & (~free_columns + 1);
    free_columns ^= f;
    Mask v = f;
    for (Mask r : reduced) {
      if (r & f) v |= top_bit(r);
    }
    basis.push_back(v);
  }
  return Subspace::span(n, basis);
}

Subspace orthogonal_complement(const Subspace& s) {
  return null_space(s.basis_matrix());
}

BigInt gaussian_binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  BigInt num = 1;
  BigInt den = 1;
  for (int i = 0; i < k; ++i) {
    num *= (BigInt(1) << (n - i)) - 1;
    den *= (BigInt(1) << (k - i)) - 1;
  }
  return num / den;
}

SubspaceEnumerator::SubspaceEnumerator(int n, int d, const CostLimits& limits)
    : n_(n), d_(d) {
  check_dim(n);
  if (d < 0 || d > n) {
    throw Error(ErrorCode::kInvalidArgument,
                "subspace dimension " + std::to_string(d) + " outside [0, " +
                    std::to_string(n) + "]");
  }
  limits.require(gaussian_binomial(n, d),
                 "gaussian_binomial(" + std::to_string(n) + ", " +
                     std::to_string(d) + ")",
                 d);
}

bool SubspaceEnumerator::load_pivot_set() {
  rows_.assign(static_cast<std::size_t>(d_), 0);
  slots_.clear();
  Mask pivot_bits = 0;
  for (int i = 0; i < d_; ++i) {
    rows_[i] = coordinate_bit(n_, pivots_[i]);
    pivot_bits |= rows_[i];
  }
  for (int i = d_ - 1; i >= 0; --i) {
    for (int q = n_; q > pivots_[i]; --q) {
      const Mask bit = coordinate_bit(n_, q);
      if (!(pivot_bits & bit)) slots_.push_back({i, bit});
    }
  }
  return true;
}

bool SubspaceEnumerator::advance_pivot_set() {
  int i = d_ - 1;
  while (i >= 0 && pivots_[i] == n_ - (d_ - 1 - i)) --i;
  if (i < 0) return false;
  ++pivots_[i];
  for (int j = i + 1; j < d_; ++j) pivots_[j] = pivots_[j - 1] + 1;
  return load_pivot_set();
}

bool SubspaceEnumerator::advance_free_bits() {
  for (const Slot& slot : slots_) {
    Mask& row = rows_[slot.row];
    if (row & slot.bit) {
      row ^= slot.bit;
    } else {
      row |= slot.bit;
      return true;
    }
  }
  return false;
}

bool SubspaceEnumerator::next() {
  if (done_) return false;
  if (!started_) {
    started_ = true;
    pivots_.resize(static_cast<std::size_t>(d_));
    for (int i = 0; i < d_; ++i) pivots_[i] = i + 1;
    return load_pivot_set();
  }
  if (advance_free_bits()) return true;
  if (advance_pivot_set()) return true;
  done_ = true;
  return false;
}

Subspace SubspaceEnumerator::subspace() const {
  return Subspace::span(n_, rows_);
}

std::vector<Subspace> enumerate_subspaces(int n, int d,
                                          const CostLimits& limits) {
  SubspaceEnumerator it(n, d, limits);
  std::vector<Subspace> out;
  while (it.next()) out.push_back(it.subspace());
  return out;
}

}  // namespace gf2crit
