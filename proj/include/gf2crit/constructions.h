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

#ifndef GF2CRIT_CONSTRUCTIONS_H_
#define GF2CRIT_CONSTRUCTIONS_H_

#include <cstdint>
#include <functional>
#include <optional>

#include "gf2crit/errors.h"
#include "gf2crit/gf2.h"
#include "gf2crit/limits.h"
#include "gf2crit/numeric.h"
#include "gf2crit/point_set.h"
#include "gf2crit/report.h"

namespace gf2crit {

// All 2^r - 1 nonzero vectors of GF(2)^r.
PointSet pg(int r);
// {x in GF(2)^r : x_1 = 1}.
PointSet ag(int r);

struct McnParams {
  int c = 0;
  int n = 1;
};

// X_n ∪ Y_n in GF(2)^{n+1}: X_n has first entry 0 and weight > n - c, Y_n has
// first entry 1 and weight <= (n - c) / 2. Weights count every coordinate.
PointSet mcn(const McnParams& p);

// span(b_2, ..., b_{n+1-c}), a codimension-(c+1) subspace missing mcn(p).
Subspace mcn_witness(const McnParams& p);

struct GirthGenParams {
  int n = 10;
  int g = 4;  // girth target
  int c = 2;  // critical-number target
  int w = 0;  // weight floor
  int m = 12;  // samples per attempt
  std::uint64_t seed = 1;
  int max_attempts = 1000;

  // s = 2cg, w = n - s, m = floor((|S| / 2)^(1/g)) with S the vectors of weight
  // at least w.
  static GirthGenParams coupled_preset(int n, int g, int c, std::uint64_t seed);
};

struct GirthGenStats {
  int attempts = 0;
  int girth_rejections = 0;     // screen found a zero-sum k-subset, k < g
  int critical_rejections = 0;  // screen found a disjoint codim-(c-1) subspace
  int verifier_rejections = 0;  // passed the screen, failed re-verification
};

struct GirthGenResult {
  PointSet set;
  GirthGenStats stats;
};

class GenerationBudgetExhausted : public Error {
 public:
  explicit GenerationBudgetExhausted(const GirthGenStats& stats);
  const GirthGenStats& stats() const { return stats_; }

 private:
  GirthGenStats stats_;
};

// Fault-injection points for tests. `screen`, when set, replaces the
// gamma/zeta screen; `corrupt`, when set, is applied to a candidate after the
// screen and before the final verification.
struct GirthGenHooks {
  std::function<bool(const PointSet&)> screen;
  std::function<PointSet(const PointSet&)> corrupt;
};

// Seeded rejection sampling. Each attempt draws m vectors uniformly from the
// nonzero vectors of weight >= w and keeps the distinct ones. A candidate is
// returned only after girth >= g and critical number >= c are re-verified
// independently of the screen.
GirthGenResult random_high_girth(const GirthGenParams& p,
                                 const GirthGenHooks& hooks = {},
                                 const CostLimits& limits = CostLimits::defaults());

// Ordered short circuits: sum over 3 <= k < g of k! times the number of
// zero-sum k-subsets.
BigInt ordered_short_circuits(const PointSet& x, int g,
                              const CostLimits& limits = CostLimits::defaults());

struct QuarterParams {
  int c = 2;
  int r = 2;
  int n = 8;
  std::optional<int> g;  // default r + 2
  std::optional<int> s;  // default 2 c g
  std::optional<PointSet> base;  // over GF(2)^{2n}; generated when absent
  std::uint64_t seed = 1;
  int m = 0;  // sample count for generation; 0 picks 4n
  int max_attempts = 1000;
};

struct ConstructionResult {
  PointSet set;
  PointSet base;
  Json params;  // effective parameters, including defaults that were filled in
};

// X' ∪ Y' over GF(2)^{2n+1} with X' = {(0, x)} for x in the base and
// Y' = {(1, y) : wt(y) <= n - g s}.
ConstructionResult construction_quarter(
    const QuarterParams& p, const CostLimits& limits = CostLimits::defaults());

struct HalfParams {
  int c = 2;
  int r = 2;
  int n = 4;
  std::optional<int> g;  // default r + 2
  std::optional<PointSet> base;  // over GF(2)^n; generated when absent
  std::uint64_t seed = 1;
  int m = 0;  // 0 picks 2n
  int max_attempts = 1000;
};

// X' ∪ Y' over GF(2)^{n+1} with Y' the full affine slice {(1, y)}.
ConstructionResult construction_half(
    const HalfParams& p, const CostLimits& limits = CostLimits::defaults());

// Checks that every restriction of rank <= r with critical number 2 is in N0.
// Restrictions are the subsets of F ∩ X over flats F spanned by independent
// subsets of X of size min(r, rank X).
Report check_low_rank_restrictions(
    const PointSet& x, int r, const CostLimits& limits = CostLimits::defaults());

// M0 (full rank n) placed on the first n coordinates of GF(2)^{n+c-2}; the
// result is every nonzero vector outside span(M0), plus M0. Requires c >= 2.
PointSet embed_mainlb(const PointSet& m0, int c);

struct NullspaceCount {
  BigInt count;
  std::optional<Rational> bound;  // absent when s == 0
  bool hypothesis_met = false;    // n >= 2^{c+1} s and s > c
};

// Number of x with W x = W v and wt(x) <= s, where c = nrows(W).
NullspaceCount nullspace_count(const Gf2Matrix& w, const Gf2Vector& v, int s,
                               const CostLimits& limits = CostLimits::defaults());

}  // namespace gf2crit

#endif  // GF2CRIT_CONSTRUCTIONS_H_
