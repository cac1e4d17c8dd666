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

#include "gf2crit/limits.h"

#include <cstdlib>
#include <string>

#include "gf2crit/errors.h"

namespace gf2crit {

CostLimits CostLimits::from_env() {
  CostLimits limits;
  if (const char* value = std::getenv(kCostCeilingEnv); value && *value) {
    char* end = nullptr;
    const unsigned long long parsed = std::strtoull(value, &end, 10);
    if (end == value || *end != '\0') {
      throw Error(ErrorCode::kInvalidArgument,
                  std::string(kCostCeilingEnv) + " is not an integer: '" +
                      value + "'");
    }
    limits.ceiling = parsed;
  }
  return limits;
}

const CostLimits& CostLimits::defaults() {
  static const CostLimits limits = from_env();
  return limits;
}

void CostLimits::require(const BigInt& cost, const std::string& guard,
                         int level) const {
  if (cost > ceiling) {
    throw CostCeilingExceeded(guard, to_string(cost), std::to_string(ceiling),
                              level);
  }
}

}  // namespace gf2crit
