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

#ifndef GF2CRIT_REPORT_H_
#define GF2CRIT_REPORT_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "json.hpp"

namespace gf2crit {

using Json = nlohmann::json;

enum class Verdict {
  kPass,
  kFail,
  kHypothesisNotMet,
  kBudgetExhausted,
};

std::string_view verdict_name(Verdict verdict);
// Inverse of verdict_name; throws InvalidArgument on unknown names.
Verdict parse_verdict(std::string_view name);

// Outcome of one verification check. A failing report always carries a
// witness that reproduces the violation when fed back to the module
// operation named by `check`.
struct Report {
  std::string check;
  Json params = Json::object();
  std::optional<std::uint64_t> seed;
  Verdict verdict = Verdict::kPass;
  Json witness;  // null unless the verdict needs one
  Json details = Json::object();
  double wall_time_ms = 0.0;

  bool passed() const { return verdict == Verdict::kPass; }

  friend bool operator==(const Report&, const Report&) = default;
};

Json to_json(const Report& report);
Report report_from_json(const Json& j);

// Multi-line aligned text rendering for terminals.
std::string render_text(const Report& report);

}  // namespace gf2crit

#endif  // GF2CRIT_REPORT_H_
