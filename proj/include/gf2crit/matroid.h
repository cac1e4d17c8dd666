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

#ifndef GF2CRIT_MATROID_H_
#define GF2CRIT_MATROID_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "gf2crit/gf2.h"
#include "gf2crit/limits.h"
#include "gf2crit/numeric.h"
#include "gf2crit/point_set.h"
#include "gf2crit/report.h"

namespace gf2crit {

// Rank of a list of vectors.
int point_rank(std::span<const Mask> points);
inline int point_rank(const VectorSet& x) { return point_rank(x.elements()); }

// True iff no element of X lies in H.
bool is_disjoint(const VectorSet& x, const Subspace& h);

// Smallest c such that some codimension-c subspace misses every point.
int critical_number(const PointSet& x,
                    const CostLimits& limits = CostLimits::defaults());

// critical_number(X) >= c, searching only codimensions below c.
bool critical_number_at_least(const PointSet& x, int c,
                              const CostLimits& limits = CostLimits::defaults());

// As critical_number, given a subspace known to miss X: the search only has to
// rule out codimensions below codim(witness). Throws InvalidArgument if the
// witness meets X.
int critical_number_given_witness(
    const PointSet& x, const Subspace& witness,
    const CostLimits& limits = CostLimits::defaults());

// Largest dimension of a subspace U with U \ {0} contained in S (0 in S is
// ignored).
int max_contained_subspace_dim(const VectorSet& s,
                               const CostLimits& limits = CostLimits::defaults());

// Number of codimension-k subspaces of the ambient space that miss X.
std::uint64_t count_disjoint_subspaces(
    const PointSet& x, int codim,
    const CostLimits& limits = CostLimits::defaults());

// Size of the smallest nonempty zero-sum subset, or nullopt if X is
// independent.
std::optional<int> girth(const PointSet& x,
                         const CostLimits& limits = CostLimits::defaults());

// Size of the smallest odd zero-sum subset, or nullopt if there is none.
std::optional<int> min_odd_circuit(
    const PointSet& x, const CostLimits& limits = CostLimits::defaults());

// Number of zero-sum k-subsets of X.
std::uint64_t count_zero_sum_subsets(
    const PointSet& x, int k, const CostLimits& limits = CostLimits::defaults());

bool is_triangle_free(const PointSet& x);

// |X| / 2^rank(X).
Rational density(const PointSet& x);

struct FlatRestriction {
  Subspace flat;
  std::vector<Mask> members;  // points of X in the flat, ascending

  friend bool operator==(const FlatRestriction&, const FlatRestriction&) = default;
};

// F ∩ X for every codimension-k subspace F of the ambient space, ordered by
// the enumeration of the k-dimensional annihilators.
std::vector<FlatRestriction> codim_flats(
    const PointSet& x, int k, const CostLimits& limits = CostLimits::defaults());

// Throws SubsetNotContained unless every element of `subset` is in X.
bool is_independent(const PointSet& x, std::span<const Mask> subset);

enum class Crit2Kind {
  kN0,
  kN14,
  kN12,
};

std::string_view crit2_kind_name(Crit2Kind kind);

struct Crit2Class {
  Crit2Kind kind = Crit2Kind::kN12;
  // The witnessing flat of rank r(X) - 1 and its members, for N0 and N14.
  std::optional<FlatRestriction> witness;
};

// Classifies a critical-number-2 point set. Candidate flats are the
// hyperplanes of span(X), visited in enumeration order; the first one that
// qualifies is the witness. Throws NotCriticalTwo.
Crit2Class classify_crit2(const PointSet& x,
                          const CostLimits& limits = CostLimits::defaults());

// Checks that S is independent and every odd circuit has at least four
// elements outside S.
bool satisfies_n0(const PointSet& x, std::span<const Mask> s);

// With c = critical_number(X) and t = rank(X) - c + 1, checks
// critical_number(X \ I) == c for every independent t-subset I.
Report richcase_check(const PointSet& x,
                      const CostLimits& limits = CostLimits::defaults());

// {e_u + e_v} over dimension nvertices; vertex u (0-based) is coordinate u+1.
PointSet cycle_matroid(std::span<const std::pair<int, int>> edges, int nvertices);

}  // namespace gf2crit

#endif  // GF2CRIT_MATROID_H_
