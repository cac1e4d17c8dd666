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

#include <gtest/gtest.h>

#include "gf2crit/errors.h"
#include "gf2crit/random.h"
#include "oracles.h"

namespace gf2crit {
namespace {

VectorSet random_set(Rng& rng, int n, int num, int den) {
  std::vector<Mask> xs;
  for (Mask x = 0; x < (Mask{1} << n); ++x)
    if (rng.below(den) < static_cast<std::uint64_t>(num)) xs.push_back(x);
  return VectorSet(n, xs);
}

PointSet random_points(Rng& rng, int n, int num, int den) {
  const VectorSet all = random_set(rng, n, num, den);
  std::vector<Mask> xs;
  for (Mask x : all.elements())
    if (x != 0) xs.push_back(x);
  return PointSet(n, xs);
}

VectorSet affine_slice(int n) {
  std::vector<Mask> xs;
  for (Mask x = 0; x < (Mask{1} << n); ++x)
    if (x & coordinate_bit(n, 1)) xs.push_back(x);
  return VectorSet(n, xs);
}

VectorSet nonzero(int n) {
  std::vector<Mask> xs;
  for (Mask x = 1; x < (Mask{1} << n); ++x) xs.push_back(x);
  return VectorSet(n, xs);
}

TEST(ComputeSpectrum, Examples) {
  const Spectrum zero = compute_spectrum(VectorSet(3, {0}));
  for (std::int32_t v : zero.table()) EXPECT_EQ(v, 1);
  const Spectrum full = compute_spectrum(VectorSet::full(2));
  EXPECT_EQ(std::vector<std::int32_t>(full.table().begin(), full.table().end()),
            (std::vector<std::int32_t>{4, 0, 0, 0}));
  const Spectrum slice = compute_spectrum(affine_slice(3));
  for (Mask u = 0; u < 8; ++u) {
    const int want = u == 0 ? 4 : (u == 0b100 ? -4 : 0);
    EXPECT_EQ(slice[u], want) << u;
  }
  EXPECT_THROW(compute_spectrum(VectorSet(kMaxDim + 1, {})), Error);
}

TEST(ComputeSpectrum, ParsevalAndBounds) {
  Rng rng(21);
  for (int t = 0; t < 100; ++t) {
    const int n = 1 + static_cast<int>(rng.below(14));
    const VectorSet x = random_set(rng, n, 1 + static_cast<int>(rng.below(7)), 8);
    const Spectrum f = compute_spectrum(x);
    EXPECT_EQ(f[0], static_cast<std::int32_t>(x.size()));
    std::int64_t sum = 0;
    for (std::int32_t v : f.table()) {
      sum += std::int64_t{v} * v;
      EXPECT_LE(std::abs(v), static_cast<std::int32_t>(x.size()));
    }
    EXPECT_EQ(sum, (std::int64_t{1} << n) * static_cast<std::int64_t>(x.size()));
  }
}

TEST(ComputeSpectrum, HyperplaneIdentity) {
  Rng rng(22);
  for (int t = 0; t < 20; ++t) {
    const int n = 1 + static_cast<int>(rng.below(10));
    const VectorSet x = random_set(rng, n, 1, 2);
    const Spectrum f = compute_spectrum(x);
    for (Mask u = 1; u < (Mask{1} << n); ++u) {
      int inside = 0;
      int outside = 0;
      for (Mask e : x.elements()) (dot(e, u) ? outside : inside) += 1;
      ASSERT_EQ(f[u], inside - outside);
    }
  }
}

TEST(UniformityDefect, Examples) {
  EXPECT_EQ(uniformity_defect(nonzero(5)), Rational(1, 32));
  EXPECT_EQ(uniformity_defect(affine_slice(4)), Rational(1, 2));
  EXPECT_EQ(uniformity_defect(VectorSet(4, {})), Rational(0));
  EXPECT_TRUE(is_uniform(nonzero(5), Rational(1, 32)));
  EXPECT_FALSE(is_uniform(affine_slice(4), Rational(1, 4)));
}

TEST(UniformityDefect, MatchesHyperplaneOracle) {
  Rng rng(23);
  for (int t = 0; t < 50; ++t) {
    const int n = 1 + static_cast<int>(rng.below(10));
    const VectorSet x = random_set(rng, n, 1 + static_cast<int>(rng.below(7)), 8);
    const std::vector<Mask> xs(x.elements().begin(), x.elements().end());
    EXPECT_EQ(uniformity_defect(x),
              Rational(oracle::max_hyperplane_discrepancy(xs, n), std::int64_t{1} << n));
  }
}

TEST(UniformityDefect, TranslationInvariant) {
  Rng rng(24);
  for (int t = 0; t < 30; ++t) {
    const int n = 1 + static_cast<int>(rng.below(10));
    const VectorSet x = random_set(rng, n, 3, 8);
    const Rational d = uniformity_defect(x);
    for (int k = 0; k < 5; ++k) {
      const Mask v = static_cast<Mask>(rng.below(std::uint64_t{1} << n));
      EXPECT_EQ(uniformity_defect(x.translate(v)), d);
    }
  }
}

TEST(TriangleCount, Examples) {
  const VectorSet fano = nonzero(3);
  EXPECT_EQ(triangle_count(fano, CountMethod::kFourier), 7u);
  EXPECT_EQ(triangle_count(fano, CountMethod::kBruteForce), 7u);
  EXPECT_EQ(triangle_count(affine_slice(5)), 0u);
  EXPECT_EQ(triangle_count(VectorSet(4, {1, 2, 4, 8})), 0u);
  EXPECT_THROW(triangle_count(VectorSet(3, {0, 1})), Error);
}

TEST(TriangleCount, MethodsAgreeWithOracle) {
  Rng rng(25);
  for (int t = 0; t < 60; ++t) {
    const int n = 1 + static_cast<int>(rng.below(14));
    const PointSet x = random_points(rng, n, 1 + static_cast<int>(rng.below(3)), 8);
    const auto fast = triangle_count(x, CountMethod::kFourier);
    EXPECT_EQ(fast, triangle_count(x, CountMethod::kBruteForce));
    if (n <= 8) {
      const std::vector<Mask> xs(x.points().begin(), x.points().end());
      EXPECT_EQ(fast, oracle::triangles(xs));
    }
  }
}

TEST(ZeroSumTriples, Examples) {
  const VectorSet v = nonzero(3);
  EXPECT_EQ(zero_sum_triples(v, v, v), 42u);
  EXPECT_EQ(zero_sum_triples(VectorSet(3, {1}), VectorSet(3, {2}), VectorSet(3, {3})), 1u);
  EXPECT_EQ(zero_sum_triples(v, VectorSet(3, {}), v), 0u);
  EXPECT_THROW(zero_sum_triples(v, nonzero(4), v), Error);
}

TEST(ZeroSumTriples, FourierMatchesBrute) {
  Rng rng(26);
  for (int t = 0; t < 30; ++t) {
    const int n = 1 + static_cast<int>(rng.below(9));
    const VectorSet a = random_set(rng, n, 3, 8);
    const VectorSet b = random_set(rng, n, 5, 8);
    const VectorSet c = random_set(rng, n, 1, 2);
    EXPECT_EQ(zero_sum_triples(a, b, c, CountMethod::kFourier),
              zero_sum_triples(a, b, c, CountMethod::kBruteForce));
  }
}

TEST(CheckSumLemma, Examples) {
  const VectorSet v = nonzero(4);
  const Report r = check_sumlemma(v, v, v, Rational(3, 10));
  EXPECT_EQ(r.verdict, Verdict::kPass);
  EXPECT_EQ(r.details.at("count"), 210);
  const VectorSet empty(4, {});
  EXPECT_EQ(check_sumlemma(empty, empty, empty, Rational(1, 10)).verdict, Verdict::kPass);
  EXPECT_EQ(check_sumlemma(affine_slice(4), v, v, Rational(1, 4)).verdict,
            Verdict::kHypothesisNotMet);
  EXPECT_THROW(check_sumlemma(v, v, v, Rational(1, 2)), Error);
  EXPECT_THROW(check_sumlemma(v, v, v, Rational(0)), Error);
}

TEST(PairCompletions, Examples) {
  const VectorSet v = nonzero(3);
  for (Mask u = 1; u < 8; ++u) EXPECT_EQ(pair_completions(v, Gf2Vector(3, u)), 3u);
  EXPECT_EQ(pair_completions(v, Gf2Vector::zero(3)), 0u);
  EXPECT_EQ(pair_completions(VectorSet(3, {0b101, 0b011}), Gf2Vector(3, 0b110)), 1u);
}

TEST(PairCompletions, AboveHalfAlwaysCompletes) {
  Rng rng(27);
  for (int t = 0; t < 30; ++t) {
    const int n = 1 + static_cast<int>(rng.below(9));
    std::vector<Mask> all;
    for (Mask x = 0; x < (Mask{1} << n); ++x) all.push_back(x);
    for (std::size_t i = all.size(); i > 1; --i) std::swap(all[i - 1], all[rng.below(i)]);
    all.resize((std::size_t{1} << (n - 1)) + 1);
    const VectorSet x(n, all);
    for (Mask v = 1; v < (Mask{1} << n); ++v)
      ASSERT_GE(pair_completions(x, Gf2Vector(n, v)), 1u);
  }
}

}  // namespace
}  // namespace gf2crit
