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

#include "gf2crit/report.h"

#include <sstream>
#include <string>

#include "gf2crit/errors.h"

namespace gf2crit {

std::string_view verdict_name(Verdict verdict) {
  switch (verdict) {
    case Verdict::kPass: return "pass";
    case Verdict::kFail: return "fail";
    case Verdict::kHypothesisNotMet: return "hypothesis-not-met";
    case Verdict::kBudgetExhausted: return "budget-exhausted";
  }
  return "unknown";
}

Verdict parse_verdict(std::string_view name) {
  for (Verdict v : {Verdict::kPass, Verdict::kFail, Verdict::kHypothesisNotMet,
                    Verdict::kBudgetExhausted}) {
    if (verdict_name(v) == name) return v;
  }
  throw Error(ErrorCode::kInvalidArgument,
              "unknown verdict '" + std::string(name) + "'");
}

Json to_json(const Report& report) {
  Json j;
  j["check"] = report.check;
  j["params"] = report.params;
  j["seed"] = report.seed ? Json(*report.seed) : Json(nullptr);
  j["verdict"] = std::string(verdict_name(report.verdict));
  j["witness"] = report.witness;
  j["details"] = report.details;
  j["wall_time_ms"] = report.wall_time_ms;
  return j;
}

Report report_from_json(const Json& j) {
  Report r;
  r.check = j.at("check").get<std::string>();
  r.params = j.at("params");
  if (!j.at("seed").is_null()) r.seed = j.at("seed").get<std::uint64_t>();
  r.verdict = parse_verdict(j.at("verdict").get<std::string>());
  r.witness = j.at("witness");
  r.details = j.at("details");
  r.wall_time_ms = j.at("wall_time_ms").get<double>();
  return r;
}

namespace {

void render_object(std::ostringstream& out, const Json& obj,
                   const std::string& indent) {
  for (const auto& [key, value] : obj.items()) {
    out << indent << key << ": ";
    if (value.is_string()) {
      out << value.get<std::string>() << "\n";
    } else if (value.is_array() && !value.empty() && value.front().is_object()) {
      out << "\n";
      for (const Json& row : value) {
        out << indent << "  -";
        bool first = true;
        for (const auto& [k, v] : row.items()) {
          out << (first ? " " : ", ") << k << "="
              << (v.is_string() ? v.get<std::string>() : v.dump());
          first = false;
        }
        out << "\n";
      }
    } else {
      out << value.dump() << "\n";
    }
  }
}

}  // namespace

std::string render_text(const Report& report) {
  std::ostringstream out;
  out << "check:   " << report.check << "\n";
  out << "verdict: " << verdict_name(report.verdict) << "\n";
  if (report.seed) out << "seed:    " << *report.seed << "\n";
  if (!report.params.empty()) {
    out << "params:\n";
    render_object(out, report.params, "  ");
  }
  if (!report.details.empty()) {
    out << "details:\n";
    render_object(out, report.details, "  ");
  }
  if (!report.witness.is_null()) {
    out << "witness: " << report.witness.dump() << "\n";
  }
  out << "time:    " << report.wall_time_ms << " ms\n";
  return out.str();
}

}  // namespace gf2crit
