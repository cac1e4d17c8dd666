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

#ifndef GF2CRIT_HARNESS_H_
#define GF2CRIT_HARNESS_H_

#include <cstdint>

#include "gf2crit/limits.h"
#include "gf2crit/numeric.h"
#include "gf2crit/point_set.h"
#include "gf2crit/report.h"

namespace gf2crit {

// Every nonzero v is the sum of two distinct members of X. Reports
// hypothesis-not-met when |X| <= 2^{n-1}, with a v lacking a completion as the
// witness when one exists.
Report check_trifreevectors(const VectorSet& x);

// `trials` seeded random sets of size 2^{n-1} + 1 through the check above.
// Requires 1 <= n <= 12.
Report verify_trifreevectors(int n, int trials, std::uint64_t seed);

// Random triples of Bernoulli subsets through check_sumlemma. Trials whose
// uniformity hypothesis fails are counted, not asserted. Requires
// 0 < eps < 1/2 and 1 <= n <= 14.
Report verify_sumlemma(int n, const Rational& eps, int trials, std::uint64_t seed);

// For each n in [n_from, n_to]: triangle-freeness of mcn(c, n) by count and by
// direct sumset checks, disjointness of the explicit witness, exact critical
// number and density. The verdict covers the first two; the rest is reported.
Report verify_mcn(int c, int n_from, int n_to,
                  const CostLimits& limits = CostLimits::defaults());

// Random full-rank and rank-deficient c x n matrices with random v; the count
// must reach the bound whenever the hypothesis holds.
Report verify_nullspace(int c, int s, int n, int trials, std::uint64_t seed,
                        const CostLimits& limits = CostLimits::defaults());

// Embedding identity and chi(M) >= chi(M0) over small bases with c in 2..4,
// and complements of codimension-(t-1) flats in PG(r-1, 2) for r <= r_cap.
Report verify_threshold_examples(int r_cap,
                                 const CostLimits& limits = CostLimits::defaults());

}  // namespace gf2crit

#endif  // GF2CRIT_HARNESS_H_
