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

#include "gf2crit/numeric.h"

#include <cctype>
#include <string>

#include "gf2crit/errors.h"

namespace gf2crit {
namespace {

BigInt parse_integer(std::string_view digits, std::string_view whole) {
  if (digits.empty()) {
    throw Error(ErrorCode::kInvalidArgument,
                "not a rational number: '" + std::string(whole) + "'");
  }
  BigInt value = 0;
  for (char ch : digits) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) {
      throw Error(ErrorCode::kInvalidArgument,
                  "not a rational number: '" + std::string(whole) + "'");
    }
    value = value * 10 + (ch - '0');
  }
  return value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  Rational value;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    const BigInt num = parse_integer(body.substr(0, slash), text);
    const BigInt den = parse_integer(body.substr(slash + 1), text);
    if (den == 0) {
      throw Error(ErrorCode::kInvalidArgument, "zero denominator in '" +
                                                   std::string(text) + "'");
    }
    value = Rational(num, den);
  } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
    const std::string_view int_part = body.substr(0, dot);
    const std::string_view frac_part = body.substr(dot + 1);
    if (int_part.empty() && frac_part.empty()) {
      throw Error(ErrorCode::kInvalidArgument,
                  "not a rational number: '" + std::string(text) + "'");
    }
    BigInt scale = 1;
    for (std::size_t i = 0; i < frac_part.size(); ++i) scale *= 10;
    const BigInt whole = int_part.empty() ? BigInt(0) : parse_integer(int_part, text);
    const BigInt frac = frac_part.empty() ? BigInt(0) : parse_integer(frac_part, text);
    value = Rational(whole * scale + frac, scale);
  } else {
    value = Rational(parse_integer(body, text));
  }
  return negative ? Rational(-value) : value;
}

std::string to_string(const Rational& value) {
  const BigInt num = boost::multiprecision::numerator(value);
  const BigInt den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

std::string to_string(const BigInt& value) { return value.str(); }

double to_double(const Rational& value) { return value.convert_to<double>(); }

BigInt binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt result = 1;
  for (int i = 1; i <= k; ++i) {
    result = result * (n - k + i) / i;
  }
  return result;
}

Rational pow2(int exponent) {
  BigInt p = 1;
  p <<= std::abs(exponent);
  return exponent >= 0 ? Rational(p) : Rational(BigInt(1), p);
}

Rational pow(const Rational& base, int exponent) {
  if (exponent < 0) {
    if (base == 0) {
      throw Error(ErrorCode::kInvalidArgument, "zero to a negative power");
    }
    return pow(Rational(1) / base, -exponent);
  }
  Rational result = 1;
  for (int i = 0; i < exponent; ++i) result *= base;
  return result;
}

}  // namespace gf2crit
