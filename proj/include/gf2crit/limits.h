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

#ifndef GF2CRIT_LIMITS_H_
#define GF2CRIT_LIMITS_H_

#include <cstdint>
#include <string>

#include "gf2crit/numeric.h"

namespace gf2crit {

// Environment variable that overrides CostLimits::ceiling.
inline constexpr const char* kCostCeilingEnv = "GF2CRIT_COST_CEILING";

// Work ceilings shared by every exhaustive search in the library. Exceeding
// one raises CostCeilingExceeded; nothing is ever approximated.
struct CostLimits {
  // Upper bound on enumerated objects: subspaces, subsets, search nodes.
  std::uint64_t ceiling = 100'000'000;
  // Largest point set handled by exhaustive Gray-code circuit search.
  int exhaustive_circuit_max = 24;
  // Largest point set handled by the meet-in-the-middle circuit search.
  int mitm_circuit_max = 64;

  // Defaults, with `ceiling` taken from GF2CRIT_COST_CEILING when set.
  static CostLimits from_env();
  // Process-wide limits, read from the environment once.
  static const CostLimits& defaults();

  // Throws CostCeilingExceeded when cost > ceiling.
  void require(const BigInt& cost, const std::string& guard,
               int level = -1) const;
};

}  // namespace gf2crit

#endif  // GF2CRIT_LIMITS_H_
