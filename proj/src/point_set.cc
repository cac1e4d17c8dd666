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

#include "gf2crit/point_set.h"

#include <algorithm>
#include <string>

#include "gf2crit/errors.h"

namespace gf2crit {

VectorSet::VectorSet(int dim, std::vector<Mask> elements)
    : dim_(dim), elements_(std::move(elements)) {
  check_dim(dim);
  for (Mask x : elements_) {
    if ((x & ~low_mask(dim)) != 0) {
      throw Error(ErrorCode::kInvalidArgument,
                  "vector has bits outside dimension " + std::to_string(dim));
    }
  }
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()),
                  elements_.end());
}

VectorSet VectorSet::full(int dim) {
  check_dim(dim);
  std::vector<Mask> all(std::size_t{1} << dim);
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<Mask>(i);
  return VectorSet(dim, std::move(all));
}

VectorSet VectorSet::from_vectors(int dim, std::span<const Gf2Vector> vectors) {
  std::vector<Mask> masks;
  masks.reserve(vectors.size());
  for (const Gf2Vector& v : vectors) {
    require(v.dim() == dim, ErrorCode::kDimensionMismatch,
            "vector of dimension " + std::to_string(v.dim()) +
                " in a set of dimension " + std::to_string(dim));
    masks.push_back(v.bits());
  }
  return VectorSet(dim, std::move(masks));
}

bool VectorSet::contains(Mask x) const {
  return std::binary_search(elements_.begin(), elements_.end(), x);
}

VectorSet VectorSet::translate(Mask v) const {
  std::vector<Mask> moved;
  moved.reserve(elements_.size());
  for (Mask x : elements_) moved.push_back(x ^ v);
  return VectorSet(dim_, std::move(moved));
}

std::vector<std::uint8_t> VectorSet::indicator() const {
  std::vector<std::uint8_t> out(std::size_t{1} << dim_, 0);
  for (Mask x : elements_) out[x] = 1;
  return out;
}

PointSet::PointSet(int dim, std::vector<Mask> points)
    : PointSet(VectorSet(dim, std::move(points))) {}

PointSet::PointSet(VectorSet set) : set_(std::move(set)) {
  if (!set_.empty() && set_.elements().front() == 0) {
    throw Error(ErrorCode::kZeroInSet,
                "a simple binary matroid cannot contain the zero vector");
  }
}

PointSet PointSet::from_vectors(int dim, std::span<const Gf2Vector> vectors) {
  return PointSet(VectorSet::from_vectors(dim, vectors));
}

PointSet PointSet::without(std::span<const Mask> removed) const {
  std::vector<Mask> drop(removed.begin(), removed.end());
  std::sort(drop.begin(), drop.end());
  std::vector<Mask> kept;
  kept.reserve(size());
  for (Mask x : points()) {
    if (!std::binary_search(drop.begin(), drop.end(), x)) kept.push_back(x);
  }
  return PointSet(dim(), std::move(kept));
}

}  // namespace gf2crit
