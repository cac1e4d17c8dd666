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

#ifndef GF2CRIT_GF2_H_
#define GF2CRIT_GF2_H_

#include <bit>
#include <compare>
#include <cstdint>
#include <ranges>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gf2crit/limits.h"
#include "gf2crit/numeric.h"

namespace gf2crit {

using Mask = std::uint32_t;

// Largest supported ambient dimension. Spectrum tables have 2^n entries.
inline constexpr int kMaxDim = 28;

// Coordinate i of an n-dimensional vector (1-based; coordinate 1 is the
// leftmost character of the text form) lives at bit n - i, so the text form
// read as a binary numeral equals the mask.
constexpr Mask coordinate_bit(int dim, int coord) {
  return Mask{1} << (dim - coord);
}

constexpr Mask low_mask(int dim) {
  return dim >= 32 ? ~Mask{0} : (Mask{1} << dim) - 1;
}

constexpr int weight(Mask m) { return std::popcount(m); }
constexpr bool parity(Mask m) { return (std::popcount(m) & 1) != 0; }
constexpr bool dot(Mask a, Mask b) { return parity(a & b); }

// Highest set bit of a nonzero mask (the pivot of an RREF row).
constexpr Mask top_bit(Mask m) { return m == 0 ? 0 : Mask{1} << (std::bit_width(m) - 1); }

// Scatters the low bits of `value` onto the set bits of `positions`
// (lowest position first). Portable pdep.
constexpr Mask deposit_bits(Mask value, Mask positions) {
  Mask out = 0;
  for (Mask bit = 1; positions != 0; bit <<= 1) {
    const Mask lowest = positions & (~positions + 1);
    if (value & bit) out |= lowest;
    positions ^= lowest;
  }
  return out;
}

// Gathers the bits of `value` at `positions` into the low bits. Portable pext.
constexpr Mask extract_bits(Mask value, Mask positions) {
  Mask out = 0;
  for (Mask bit = 1; positions != 0; bit <<= 1) {
    const Mask lowest = positions & (~positions + 1);
    if (value & lowest) out |= bit;
    positions ^= lowest;
  }
  return out;
}

// Throws DimensionTooLarge unless 0 <= dim <= kMaxDim.
void check_dim(int dim);

std::string to_bit_string(Mask bits, int dim);
// Parses a string over {0,1}; the length is the dimension.
Mask parse_bit_string(std::string_view text);

class Gf2Vector {
 public:
  Gf2Vector() = default;
  Gf2Vector(int dim, Mask bits);

  static Gf2Vector zero(int dim) { return Gf2Vector(dim, 0); }
  static Gf2Vector unit(int dim, int coord);
  static Gf2Vector from_string(std::string_view text);

  int dim() const { return dim_; }
  Mask bits() const { return bits_; }
  bool coord(int i) const { return (bits_ & coordinate_bit(dim_, i)) != 0; }
  int weight() const { return std::popcount(bits_); }
  bool is_zero() const { return bits_ == 0; }
  std::string to_string() const { return to_bit_string(bits_, dim_); }

  friend Gf2Vector operator+(const Gf2Vector& a, const Gf2Vector& b);
  friend bool dot(const Gf2Vector& a, const Gf2Vector& b);
  friend bool operator==(const Gf2Vector&, const Gf2Vector&) = default;
  friend auto operator<=>(const Gf2Vector&, const Gf2Vector&) = default;

 private:
  int dim_ = 0;
  Mask bits_ = 0;
};

// Row-major binary matrix; each row is an ncols-bit mask.
class Gf2Matrix {
 public:
  explicit Gf2Matrix(int ncols, std::vector<Mask> rows = {});

  static Gf2Matrix identity(int n);
  static Gf2Matrix zero(int nrows, int ncols);
  static Gf2Matrix from_strings(const std::vector<std::string>& rows);

  int nrows() const { return static_cast<int>(rows_.size()); }
  int ncols() const { return ncols_; }
  std::span<const Mask> rows() const { return rows_; }
  Gf2Vector row(int i) const { return Gf2Vector(ncols_, rows_.at(i)); }

  // W·x as an nrows-dimensional vector (row 1 is coordinate 1).
  Mask apply(Mask x) const;
  Gf2Vector apply(const Gf2Vector& x) const;

  friend bool operator==(const Gf2Matrix&, const Gf2Matrix&) = default;

 private:
  int ncols_;
  std::vector<Mask> rows_;
};

// RREF of a list of row masks: no zero rows, strictly decreasing pivots
// (pivot = highest set bit = leftmost coordinate).
std::vector<Mask> rref_rows(std::span<const Mask> rows);
int rank_of(std::span<const Mask> rows);

int rank(const Gf2Matrix& m);
Gf2Matrix rref(const Gf2Matrix& m);

// A subspace of GF(2)^n held as its canonical RREF basis.
class Subspace {
 public:
  Subspace() = default;
  static Subspace span(int ambient_dim, std::span<const Mask> generators);
  static Subspace full(int ambient_dim);
  static Subspace zero(int ambient_dim);

  int ambient_dim() const { return ambient_dim_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  int codim() const { return ambient_dim_ - dim(); }
  std::span<const Mask> basis() const { return basis_; }
  Gf2Matrix basis_matrix() const { return Gf2Matrix(ambient_dim_, basis_); }
  std::uint64_t size() const { return std::uint64_t{1} << dim(); }

  Mask pivot_mask() const { return pivot_mask_; }
  Mask non_pivot_mask() const { return low_mask(ambient_dim_) & ~pivot_mask_; }

  // The unique element of x + H with zeros at every pivot position. This is
  // the canonical coset representative.
  Mask reduce(Mask x) const;
  bool contains(Mask x) const { return reduce(x) == 0; }

  // Coordinates of h in H with respect to the RREF basis, as a dim()-bit
  // vector (basis row 1 is coordinate 1). Only meaningful for h in H.
  Mask coordinates(Mask h) const { return extract_bits(h, pivot_mask_); }
  // Inverse of coordinates(): the element of H with the given coordinates.
  Mask lift(Mask coords) const;

  // Index in [0, 2^codim) of the coset containing x; coset_representative()
  // inverts it.
  std::uint32_t coset_index(Mask x) const {
    return extract_bits(reduce(x), non_pivot_mask());
  }
  Mask coset_representative(std::uint32_t index) const {
    return deposit_bits(index, non_pivot_mask());
  }

  // H ∩ {x : <x, normal> = 0}.
  Subspace intersect_hyperplane(Mask normal) const;

  std::vector<Mask> elements() const;

  friend bool operator==(const Subspace&, const Subspace&) = default;

 private:
  Subspace(int ambient_dim, std::vector<Mask> basis);

  int ambient_dim_ = 0;
  std::vector<Mask> basis_;
  Mask pivot_mask_ = 0;
};

// {x : m·x = 0}.
Subspace null_space(const Gf2Matrix& m);
Subspace orthogonal_complement(const Subspace& s);

// Number of k-dimensional subspaces of GF(2)^n, exact.
BigInt gaussian_binomial(int n, int k);

// Streams every d-dimensional subspace of GF(2)^n exactly once, ordered
// lexicographically by pivot set and then by basis rows (row 1 most
// significant). Construction checks gaussian_binomial(n, d) against the
// ceiling.
class SubspaceEnumerator {
 public:
  SubspaceEnumerator(int n, int d,
                     const CostLimits& limits = CostLimits::defaults());

  // Advances to the next subspace; the first call yields the first one.
  bool next();
  std::span<const Mask> basis() const { return rows_; }
  Subspace subspace() const;

 private:
  bool load_pivot_set();
  bool advance_pivot_set();
  bool advance_free_bits();

  int n_;
  int d_;
  bool started_ = false;
  bool done_ = false;
  std::vector<int> pivots_;  // 1-based coordinates, increasing
  std::vector<Mask> rows_;
  struct Slot {
    int row;
    Mask bit;
  };
  std::vector<Slot> slots_;  // least significant first
};

std::vector<Subspace> enumerate_subspaces(
    int n, int d, const CostLimits& limits = CostLimits::defaults());

// One representative per coset of h: index j maps to the vector with the bits
// of j on the non-pivot coordinates. The representative of h itself is 0.
inline auto cosets(const Subspace& h) {
  const Mask free_positions = h.non_pivot_mask();
  const int n = h.ambient_dim();
  return std::views::iota(std::uint64_t{0}, std::uint64_t{1} << h.codim()) |
         std::views::transform([free_positions, n](std::uint64_t j) {
           return Gf2Vector(n, deposit_bits(static_cast<Mask>(j), free_positions));
         });
}

}  // namespace gf2crit

#endif  // GF2CRIT_GF2_H_
