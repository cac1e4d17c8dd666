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

#ifndef GF2CRIT_REGULARITY_H_
#define GF2CRIT_REGULARITY_H_

#include <cstdint>
#include <vector>

#include "gf2crit/errors.h"
#include "gf2crit/gf2.h"
#include "gf2crit/numeric.h"
#include "gf2crit/point_set.h"

namespace gf2crit {

// H_v(X) = {h in H : h + v in X}, expressed in the coordinates of H's RREF
// basis, so the result lives in GF(2)^{dim H}.
VectorSet coset_slice(const VectorSet& x, const Subspace& h, const Gf2Vector& v);

struct CosetRecord {
  Mask representative;
  VectorSet slice;
  Rational density;  // |slice| / |H|
  Rational defect;   // uniformity defect of the slice inside H
};

struct CosetProfile {
  Subspace h;
  std::vector<CosetRecord> cosets;  // indexed as cosets(h)
};

CosetProfile coset_profile(const VectorSet& x, const Subspace& h);

// Mean squared coset density: sum over cosets of (|slice| / |H|)^2 / 2^codim.
Rational energy(const VectorSet& x, const Subspace& h);

struct RegularityCertificate {
  Subspace h;
  Rational eps;
  std::vector<Mask> bad_cosets;  // canonical representatives
  BigInt bad_mass;               // |bad_cosets| * |H|
  bool regular = false;

  friend bool operator==(const RegularityCertificate&,
                         const RegularityCertificate&) = default;
};

// A coset is bad when its slice has defect > eps. Regular iff the number of
// bad elements of V is at most eps * 2^n. Requires 0 < eps < 1/2.
RegularityCertificate is_regular(const VectorSet& x, const Subspace& h,
                                 const Rational& eps);

struct RefinementStep {
  Mask coset;      // representative of the refined bad coset
  Mask character;  // u lifted to GF(2)^n
  Rational defect;
  Rational energy_before;
  Rational energy_after;
  int codim_after;
};

struct RegularityResult {
  Subspace h;
  RegularityCertificate certificate;
  std::vector<RefinementStep> trace;
};

class MaxCodimExceeded : public Error {
 public:
  MaxCodimExceeded(int max_codim, std::vector<RefinementStep> trace);

  const std::vector<RefinementStep>& trace() const { return trace_; }

 private:
  std::vector<RefinementStep> trace_;
};

// Energy-increment refinement from H = V: while H is not eps-regular, cut H
// by the character witnessing the worst bad coset.
RegularityResult find_regular_subspace(const VectorSet& x, const Rational& eps,
                                       int max_codim);

}  // namespace gf2crit

#endif  // GF2CRIT_REGULARITY_H_
