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

#ifndef GF2CRIT_ERRORS_H_
#define GF2CRIT_ERRORS_H_

#include <stdexcept>
#include <string>

namespace gf2crit {

enum class ErrorCode {
  kInvalidArgument,
  kDimensionTooLarge,
  kDimensionMismatch,
  kZeroInSet,
  kCostCeilingExceeded,
  kSubsetNotContained,
  kNotCriticalTwo,
  kLoopEdge,
  kRankDeficientBase,
  kGenerationBudgetExhausted,
  kMaxCodimExceeded,
  kParse,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

// Raised when an exact computation would exceed the configured work ceiling.
// `guard` names the quantity that was bounded (for example
// "gaussian_binomial(14, 3)"), `level` the search level that was reached.
class CostCeilingExceeded : public Error {
 public:
  CostCeilingExceeded(std::string guard, std::string required,
                      std::string ceiling, int level);

  const std::string& guard() const { return guard_; }
  const std::string& required() const { return required_; }
  const std::string& ceiling() const { return ceiling_; }
  int level() const { return level_; }

 private:
  std::string guard_;
  std::string required_;
  std::string ceiling_;
  int level_;
};

enum class ParseErrorKind {
  kBadHeader,
  kBadLineLength,
  kZeroVector,
  kDuplicateVector,
  kBadCharacter,
};

const char* parse_error_kind_name(ParseErrorKind kind);

class ParseError : public Error {
 public:
  ParseError(ParseErrorKind kind, int line, const std::string& detail);

  ParseErrorKind kind() const { return kind_; }
  int line() const { return line_; }

 private:
  ParseErrorKind kind_;
  int line_;
};

inline void require(bool condition, ErrorCode code, const std::string& what) {
  if (!condition) throw Error(code, what);
}

}  // namespace gf2crit

#endif  // GF2CRIT_ERRORS_H_
