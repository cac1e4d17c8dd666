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

#ifndef GF2CRIT_SPECTRUM_H_
#define GF2CRIT_SPECTRUM_H_

#include <cstdint>
#include <span>
#include <vector>

#include "gf2crit/gf2.h"
#include "gf2crit/numeric.h"
#include "gf2crit/point_set.h"
#include "gf2crit/report.h"

namespace gf2crit {

// Character-sum table F_X(u) = sum over x in X of (-1)^<x,u>, indexed by u.
class Spectrum {
 public:
  Spectrum(int dim, std::vector<std::int32_t> table);

  int dim() const { return dim_; }
  std::size_t size() const { return table_.size(); }
  std::int32_t operator[](Mask u) const { return table_[u]; }
  std::span<const std::int32_t> table() const { return table_; }

  // max over u != 0 of |F_X(u)|; 0 when dim == 0.
  std::int32_t max_nontrivial() const;
  // Smallest u != 0 attaining max_nontrivial(), or 0 when dim == 0.
  Mask argmax_nontrivial() const;

 private:
  int dim_;
  std::vector<std::int32_t> table_;
};

// Fast Walsh-Hadamard transform of the indicator of X, O(n 2^n).
Spectrum compute_spectrum(const VectorSet& x);

// max_{u != 0} |F_X(u)| / 2^n. X is eps-uniform iff the defect is <= eps.
Rational uniformity_defect(const VectorSet& x);
Rational uniformity_defect(const Spectrum& spectrum);
bool is_uniform(const VectorSet& x, const Rational& eps);

enum class CountMethod {
  kAuto,
  kFourier,
  kBruteForce,
};

// Number of 3-subsets {a, b, c} of X with a + b + c = 0. Throws ZeroInSet if
// 0 is in X.
std::uint64_t triangle_count(const VectorSet& x,
                             CountMethod method = CountMethod::kAuto);

// |{(a1, a2, a3) in A1 x A2 x A3 : a1 + a2 + a3 = 0}|.
std::uint64_t zero_sum_triples(const VectorSet& a1, const VectorSet& a2,
                               const VectorSet& a3,
                               CountMethod method = CountMethod::kFourier);

// Checks |solutions| >= (alpha1 alpha2 alpha3 - eps) 2^{2n} when A1 and A2 are
// eps-uniform; otherwise reports hypothesis-not-met. Requires 0 < eps < 1/2.
Report check_sumlemma(const VectorSet& a1, const VectorSet& a2,
                      const VectorSet& a3, const Rational& eps);

// Unordered pairs {x1, x2} of distinct members of X with x1 + x2 = v.
std::uint64_t pair_completions(const VectorSet& x, const Gf2Vector& v);

}  // namespace gf2crit

#endif  // GF2CRIT_SPECTRUM_H_
