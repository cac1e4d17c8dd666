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

#ifndef GF2CRIT_POINT_SET_H_
#define GF2CRIT_POINT_SET_H_

#include <cstdint>
#include <span>
#include <vector>

#include "gf2crit/gf2.h"

namespace gf2crit {

// An arbitrary subset of GF(2)^n, stored sorted and duplicate-free. The zero
// vector is allowed; Fourier quantities are defined for any subset.
class VectorSet {
 public:
  VectorSet() = default;
  // Sorts and removes duplicates. Throws if a vector has bits above dim.
  VectorSet(int dim, std::vector<Mask> elements);

  static VectorSet full(int dim);
  static VectorSet from_vectors(int dim, std::span<const Gf2Vector> vectors);

  int dim() const { return dim_; }
  std::size_t size() const { return elements_.size(); }
  bool empty() const { return elements_.empty(); }
  std::span<const Mask> elements() const { return elements_; }
  bool contains(Mask x) const;

  VectorSet translate(Mask v) const;

  // Dense 0/1 indicator over all 2^dim vectors.
  std::vector<std::uint8_t> indicator() const;

  friend bool operator==(const VectorSet&, const VectorSet&) = default;

 private:
  int dim_ = 0;
  std::vector<Mask> elements_;
};

// A simple binary matroid M(X): a duplicate-free set of nonzero vectors in
// GF(2)^n, sorted ascending by mask.
class PointSet {
 public:
  PointSet() = default;
  // Sorts and merges duplicates; throws ZeroInSet if 0 is present.
  PointSet(int dim, std::vector<Mask> points);
  explicit PointSet(VectorSet set);

  static PointSet from_vectors(int dim, std::span<const Gf2Vector> vectors);

  int dim() const { return set_.dim(); }
  std::size_t size() const { return set_.size(); }
  bool empty() const { return set_.empty(); }
  std::span<const Mask> points() const { return set_.elements(); }
  bool contains(Mask x) const { return set_.contains(x); }

  const VectorSet& as_set() const { return set_; }
  operator const VectorSet&() const { return set_; }  // NOLINT

  // X minus the given points (points not in X are ignored).
  PointSet without(std::span<const Mask> removed) const;

  friend bool operator==(const PointSet&, const PointSet&) = default;

 private:
  VectorSet set_;
};

}  // namespace gf2crit

#endif  // GF2CRIT_POINT_SET_H_
