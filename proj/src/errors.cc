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

#include "gf2crit/errors.h"

#include <string>

namespace gf2crit {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kDimensionTooLarge: return "DimensionTooLarge";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kZeroInSet: return "ZeroInSet";
    case ErrorCode::kCostCeilingExceeded: return "CostCeilingExceeded";
    case ErrorCode::kSubsetNotContained: return "SubsetNotContained";
    case ErrorCode::kNotCriticalTwo: return "NotCriticalTwo";
    case ErrorCode::kLoopEdge: return "LoopEdge";
    case ErrorCode::kRankDeficientBase: return "RankDeficientBase";
    case ErrorCode::kGenerationBudgetExhausted: return "GenerationBudgetExhausted";
    case ErrorCode::kMaxCodimExceeded: return "MaxCodimExceeded";
    case ErrorCode::kParse: return "ParseError";
  }
  return "Unknown";
}

CostCeilingExceeded::CostCeilingExceeded(std::string guard,
                                         std::string required,
                                         std::string ceiling, int level)
    : Error(ErrorCode::kCostCeilingExceeded,
            "cost ceiling exceeded: " + guard + " = " + required +
                " > ceiling " + ceiling +
                (level >= 0 ? " (level " + std::to_string(level) + ")" : "")),
      guard_(std::move(guard)),
      required_(std::move(required)),
      ceiling_(std::move(ceiling)),
      level_(level) {}

const char* parse_error_kind_name(ParseErrorKind kind) {
  switch (kind) {
    case ParseErrorKind::kBadHeader: return "BadHeader";
    case ParseErrorKind::kBadLineLength: return "BadLineLength";
    case ParseErrorKind::kZeroVector: return "ZeroVector";
    case ParseErrorKind::kDuplicateVector: return "DuplicateVector";
    case ParseErrorKind::kBadCharacter: return "BadCharacter";
  }
  return "Unknown";
}

ParseError::ParseError(ParseErrorKind kind, int line, const std::string& detail)
    : Error(ErrorCode::kParse, std::string(parse_error_kind_name(kind)) +
                                   " at line " + std::to_string(line) + ": " +
                                   detail),
      kind_(kind),
      line_(line) {}

}  // namespace gf2crit
