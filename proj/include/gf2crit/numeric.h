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

#ifndef GF2CRIT_NUMERIC_H_
#define GF2CRIT_NUMERIC_H_

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace gf2crit {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Accepts "3", "-2", "0.125", "1/8". Decimal input is converted exactly, so
// "0.1" is 1/10.
Rational parse_rational(std::string_view text);

// "7/8", "0", "3".
std::string to_string(const Rational& value);
std::string to_string(const BigInt& value);

double to_double(const Rational& value);

BigInt binomial(int n, int k);

// 2^exponent, exponent may be negative.
Rational pow2(int exponent);

// base^exponent for a signed exponent; base must be nonzero when exponent < 0.
Rational pow(const Rational& base, int exponent);

}  // namespace gf2crit

#endif  // GF2CRIT_NUMERIC_H_
