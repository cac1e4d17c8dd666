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

#include "gf2crit/spectrum.h"

#include <cstdlib>
#include <string>

#include "gf2crit/errors.h"

namespace gf2crit {
namespace {

using Wide = __int128;

void require_same_dim(const VectorSet& a, const VectorSet& b) {
  if (a.dim() != b.dim()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "sets of dimension " + std::to_string(a.dim()) + " and " +
                    std::to_string(b.dim()));
  }
}

void require_eps(const Rational& eps) {
  if (!(eps > 0 && eps < Rational(1, 2))) {
    throw Error(ErrorCode::kInvalidArgument,
                "eps must satisfy 0 < eps < 1/2, got " + to_string(eps));
  }
}

}  // namespace

Spectrum::Spectrum(int dim, std::vector<std::int32_t> table)
    : dim_(dim), table_(std::move(table)) {
  check_dim(dim);
  require(table_.size() == (std::size_t{1} << dim), ErrorCode::kInvalidArgument,
          "spectrum table must have 2^dim entries");
}

std::int32_t Spectrum::max_nontrivial() const {
  std::int32_t best = 0;
  for (std::size_t u = 1; u < table_.size(); ++u) {
    best = std::max(best, std::abs(table_[u]));
  }
  return best;
}

Mask Spectrum::argmax_nontrivial() const {
  std::int32_t best = -1;
  Mask arg = 0;
  for (std::size_t u = 1; u < table_.size(); ++u) {
    if (std::abs(table_[u]) > best) {
      best = std::abs(table_[u]);
      arg = static_cast<Mask>(u);
    }
  }
  return arg;
}

Spectrum compute_spectrum(const VectorSet& x) {
  const std::size_t size = std::size_t{1} << x.dim();
  std::vector<std::int32_t> t(size, 0);
  for (Mask e : x.elements()) t[e] = 1;
  for (std::size_t len = 1; len < size; len <<= 1) {
    for (std::size_t block = 0; block < size; block += len << 1) {
      for (std::size_t i = block; i < block + len; ++i) {
        const std::int32_t a = t[i];
        const std::int32_t b = t[i + len];
        t[i] = a + b;
        t[i + len] = a - b;
      }
    }
  }
  return Spectrum(x.dim(), std::move(t));
}

Rational uniformity_defect(const Spectrum& spectrum) {
  return Rational(BigInt(spectrum.max_nontrivial()),
                  BigInt(1) << spectrum.dim());
}

Rational uniformity_defect(const VectorSet& x) {
  return uniformity_defect(compute_spectrum(x));
}

bool is_uniform(const VectorSet& x, const Rational& eps) {
  return uniformity_defect(x) <= eps;
}

std::uint64_t triangle_count(const VectorSet& x, CountMethod method) {
  if (!x.empty() && x.elements().front() == 0) {
    throw Error(ErrorCode::kZeroInSet,
                "triangle_count requires a set without the zero vector");
  }
  if (method == CountMethod::kAuto) {
    const double pairs = static_cast<double>(x.size()) * static_cast<double>(x.size());
    const double transform = static_cast<double>(x.dim() + 1) *
                             static_cast<double>(std::uint64_t{1} << x.dim());
    method = pairs < transform ? CountMethod::kBruteForce : CountMethod::kFourier;
  }
  if (method == CountMethod::kFourier) {
    const Spectrum s = compute_spectrum(x);
    Wide sum = 0;
    for (std::int32_t f : s.table()) sum += Wide(f) * f * f;
    // Ordered zero-sum triples number sum / 2^n; with 0 excluded every such
    // triple has distinct entries.
    return static_cast<std::uint64_t>((sum >> x.dim()) / 6);
  }
  const std::span<const Mask> e = x.elements();
  std::uint64_t count = 0;
  for (std::size_t i = 0; i < e.size(); ++i) {
    for (std::size_t j = i + 1; j < e.size(); ++j) {
      const Mask c = e[i] ^ e[j];
      if (c > e[j] && x.contains(c)) ++count;
    }
  }
  return count;
}

std::uint64_t zero_sum_triples(const VectorSet& a1, const VectorSet& a2,
                               const VectorSet& a3, CountMethod method) {
  require_same_dim(a1, a2);
  require_same_dim(a1, a3);
  if (method == CountMethod::kBruteForce) {
    std::uint64_t count = 0;
    for (Mask x : a1.elements()) {
      for (Mask y : a2.elements()) {
        if (a3.contains(x ^ y)) ++count;
      }
    }
    return count;
  }
  const Spectrum f1 = compute_spectrum(a1);
  const Spectrum f2 = compute_spectrum(a2);
  const Spectrum f3 = compute_spectrum(a3);
  Wide sum = 0;
  for (std::size_t u = 0; u < f1.size(); ++u) {
    sum += Wide(f1.table()[u]) * f2.table()[u] * f3.table()[u];
  }
  return static_cast<std::uint64_t>(sum >> a1.dim());
}

Report check_sumlemma(const VectorSet& a1, const VectorSet& a2,
                      const VectorSet& a3, const Rational& eps) {
  require_eps(eps);
  require_same_dim(a1, a2);
  require_same_dim(a1, a3);
  const int n = a1.dim();
  const BigInt space = BigInt(1) << n;

  Report report;
  report.check = "sumlemma";
  report.params = {{"n", n}, {"eps", to_string(eps)}};

  const Rational defect1 = uniformity_defect(a1);
  const Rational defect2 = uniformity_defect(a2);
  const Rational alpha1(BigInt(a1.size()), space);
  const Rational alpha2(BigInt(a2.size()), space);
  const Rational alpha3(BigInt(a3.size()), space);
  report.details = {{"alpha1", to_string(alpha1)},
                    {"alpha2", to_string(alpha2)},
                    {"alpha3", to_string(alpha3)},
                    {"defect1", to_string(defect1)},
                    {"defect2", to_string(defect2)}};
  if (defect1 > eps || defect2 > eps) {
    report.verdict = Verdict::kHypothesisNotMet;
    return report;
  }
  const std::uint64_t count = zero_sum_triples(a1, a2, a3);
  const Rational bound = (alpha1 * alpha2 * alpha3 - eps) * Rational(space * space);
  report.details["count"] = count;
  report.details["bound"] = to_string(bound);
  report.verdict = Rational(BigInt(count)) >= bound ? Verdict::kPass : Verdict::kFail;
  return report;
}

std::uint64_t pair_completions(const VectorSet& x, const Gf2Vector& v) {
  require(v.dim() == x.dim(), ErrorCode::kDimensionMismatch,
          "pair_completions: vector and set dimensions differ");
  if (v.is_zero()) return 0;
  std::uint64_t ordered = 0;
  for (Mask e : x.elements()) {
    if (x.contains(e ^ v.bits())) ++ordered;
  }
  return ordered / 2;
}

}  // namespace gf2crit
