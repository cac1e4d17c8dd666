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

#include "gf2crit/constructions.h"

#include <gtest/gtest.h>

#include "gf2crit/errors.h"
#include "gf2crit/matroid.h"
#include "gf2crit/random.h"
#include "gf2crit/spectrum.h"
#include "oracles.h"

namespace gf2crit {
namespace {

std::vector<Mask> as_vec(const PointSet& x) { return {x.points().begin(), x.points().end()}; }

TEST(Pg, Examples) {
  EXPECT_EQ(pg(1), PointSet(1, {1}));
  const PointSet fano = pg(3);
  EXPECT_EQ(fano.size(), 7u);
  EXPECT_EQ(critical_number(fano), 3);
  EXPECT_EQ(girth(fano), 3);
  EXPECT_EQ(triangle_count(fano), 7u);
  EXPECT_EQ(pg(2), PointSet(2, {1, 2, 3}));
}

TEST(Ag, Examples) {
  EXPECT_EQ(ag(2), PointSet(2, {0b10, 0b11}));
  EXPECT_EQ(ag(4).size(), 8u);
  EXPECT_EQ(critical_number(ag(4)), 1);
  for (int r = 1; r <= 8; ++r) EXPECT_TRUE(is_triangle_free(ag(r)));
}

TEST(Mcn, Examples) {
  EXPECT_EQ(mcn({1, 4}), PointSet(5, {0b01111, 0b10000}));
  EXPECT_EQ(mcn({0, 3}), PointSet(4, {0b1000}));
  EXPECT_TRUE(is_triangle_free(mcn({1, 7})));
}

TEST(Mcn, MatchesDefinitionByEnumeration) {
  for (int c = 0; c <= 2; ++c) {
    for (int n = 1; n <= 12; ++n) {
      std::vector<Mask> want;
      const Mask first = coordinate_bit(n + 1, 1);
      for (Mask v = 1; v < (Mask{1} << (n + 1)); ++v) {
        const int w = weight(v);
        if (!(v & first) && w > n - c) want.push_back(v);
        if ((v & first) && 2 * w <= n - c) want.push_back(v);
      }
      EXPECT_EQ(as_vec(mcn({c, n})), want) << c << "," << n;
    }
  }
}

TEST(Mcn, WitnessIsDisjointWithRightCodim) {
  for (int c = 0; c <= 2; ++c) {
    for (int n = 3 * c + 1; n <= 12; ++n) {
      const Subspace w = mcn_witness({c, n});
      EXPECT_EQ(w.codim(), c + 1);
      EXPECT_TRUE(is_disjoint(mcn({c, n}), w));
    }
  }
}

TEST(RandomHighGirth, DefaultInstanceVerifies) {
  const GirthGenResult r = random_high_girth({});
  EXPECT_GE(girth(r.set).value_or(1000), 4);
  EXPECT_GE(critical_number(r.set), 2);
  EXPECT_GE(r.stats.attempts, 1);
  EXPECT_EQ(r.stats.verifier_rejections, 0);
}

TEST(RandomHighGirth, WeightFloorRespected) {
  GirthGenParams p;
  p.n = 12;
  p.g = 4;
  p.c = 1;
  p.w = 6;
  p.m = 20;
  const GirthGenResult r = random_high_girth(p);
  for (Mask x : r.set.points()) EXPECT_GE(weight(x), 6);
}

TEST(RandomHighGirth, TrivialParameters) {
  GirthGenParams p;
  p.n = 5;
  p.g = 3;
  p.c = 1;
  p.m = 1;
  const GirthGenResult r = random_high_girth(p);
  EXPECT_EQ(r.set.size(), 1u);
  EXPECT_EQ(r.stats.attempts, 1);
}

TEST(RandomHighGirth, InfeasibleExhaustsBudget) {
  GirthGenParams p;
  p.n = 6;
  p.g = 7;
  p.c = 4;
  p.m = 30;
  p.max_attempts = 20;
  try {
    random_high_girth(p);
    FAIL() << "expected GenerationBudgetExhausted";
  } catch (const GenerationBudgetExhausted& e) {
    EXPECT_EQ(e.stats().attempts, 20);
  }
}

TEST(RandomHighGirth, DeterministicInSeed) {
  GirthGenParams p;
  p.seed = 77;
  EXPECT_EQ(random_high_girth(p).set, random_high_girth(p).set);
}

TEST(RandomHighGirth, FaultInjectionNeverLeaksUnverifiedSet) {
  GirthGenParams p;
  p.max_attempts = 25;
  GirthGenHooks accept_all;
  accept_all.screen = [](const PointSet&) { return true; };
  // Adding a triangle after the screen must be caught by the verifier.
  accept_all.corrupt = [](const PointSet& x) {
    std::vector<Mask> pts(x.points().begin(), x.points().end());
    pts.push_back(1);
    pts.push_back(2);
    pts.push_back(3);
    return PointSet(x.dim(), pts);
  };
  try {
    const GirthGenResult r = random_high_girth(p, accept_all);
    FAIL() << "returned a set of girth " << girth(r.set).value_or(-1);
  } catch (const GenerationBudgetExhausted& e) {
    EXPECT_EQ(e.stats().verifier_rejections, 25);
  }
  GirthGenHooks lax;
  lax.screen = [](const PointSet&) { return true; };
  const GirthGenResult r = random_high_girth(p, lax);
  EXPECT_GE(girth(r.set).value_or(1000), 4);
  EXPECT_GE(critical_number(r.set), 2);
}

TEST(RandomHighGirth, CoupledPreset) {
  const GirthGenParams p = GirthGenParams::coupled_preset(20, 3, 1, 5);
  EXPECT_EQ(p.w, 14);
  // |S| = sum_{k>=14} C(20,k); m is the largest value with m^3 <= |S| / 2.
  BigInt s = 0;
  for (int k = 14; k <= 20; ++k) s += binomial(20, k);
  const BigInt half = s / 2;
  EXPECT_LE(boost::multiprecision::pow(BigInt(p.m), 3), half);
  EXPECT_GT(boost::multiprecision::pow(BigInt(p.m + 1), 3), half);
  EXPECT_THROW(GirthGenParams::coupled_preset(40, 3, 1, 5), Error);
}

TEST(OrderedShortCircuits, CountsOrderedTuples) {
  // PG(2,2): 7 triangles (3! orders each) and 7 four-circuits (4! orders).
  EXPECT_EQ(ordered_short_circuits(pg(3), 4), 42);
  EXPECT_EQ(ordered_short_circuits(pg(3), 5), 42 + 7 * 24);
  EXPECT_EQ(ordered_short_circuits(ag(4), 4), 0);
}

TEST(ConstructionQuarter, DegenerateIsEmpty) {
  QuarterParams p;
  p.n = 3;
  p.g = 4;
  p.s = 2;
  p.base = PointSet(6, {});
  const ConstructionResult r = construction_quarter(p);
  EXPECT_TRUE(r.set.empty());
  EXPECT_EQ(r.set.dim(), 7);
}

TEST(ConstructionQuarter, YPartMatchesBinomialSum) {
  QuarterParams p;
  p.n = 6;
  p.g = 3;
  p.s = 1;
  p.base = PointSet(12, {});
  const ConstructionResult r = construction_quarter(p);
  BigInt want = 0;
  for (int i = 0; i <= 3; ++i) want += binomial(12, i);
  EXPECT_EQ(BigInt(r.set.size()), want);
  for (Mask x : r.set.points()) EXPECT_TRUE(x & coordinate_bit(13, 1));
  EXPECT_EQ(r.params.at("y_max_weight"), 3);
}

TEST(ConstructionQuarter, SmallInstanceRestrictionsAreN0) {
  QuarterParams p;
  p.c = 2;
  p.r = 2;
  p.n = 8;
  p.g = 4;
  p.s = 2;
  const ConstructionResult r = construction_quarter(p);
  EXPECT_EQ(r.set.dim(), 17);
  EXPECT_GE(girth(r.base).value_or(1000), 4);
  EXPECT_EQ(check_low_rank_restrictions(r.set, 2).verdict, Verdict::kPass);
}

// Base {j} ∪ {j + e_i} in GF(2)^{2n}: all 2n + 1 points sum to zero and no
// smaller set does, so the girth is 2n + 1, and every weight is >= 2n - 1.
PointSet all_ones_star(int dim) {
  const Mask j = low_mask(dim);
  std::vector<Mask> xs{j};
  for (int i = 1; i <= dim; ++i) xs.push_back(j ^ coordinate_bit(dim, i));
  return PointSet(dim, xs);
}

TEST(ConstructionQuarter, RankThreeRestrictionsOfStarBase) {
  QuarterParams p;
  p.c = 2;
  p.r = 3;
  p.n = 6;
  p.g = 5;
  p.s = 1;
  p.base = all_ones_star(12);
  ASSERT_EQ(girth(*p.base), 13);
  const ConstructionResult r = construction_quarter(p);
  EXPECT_EQ(r.params.at("y_max_weight"), 1);
  const Report rep = check_low_rank_restrictions(r.set, 3);
  EXPECT_EQ(rep.verdict, Verdict::kPass) << to_json(rep).dump();
  // A rank-3 set with critical number 2 contains a triangle, and the weight
  // gap rules triangles out here, so every restriction has chi <= 1.
  EXPECT_TRUE(is_triangle_free(r.set));
  EXPECT_EQ(rep.details.at("critical_two"), 0);
}

// With s = 0 the weight hypothesis on the base fails (j + e_i has weight
// 2n - 1), and a triangle (j + e_1) + (1, y) + (1, y') appears whose
// restriction is not of the N0 kind.
TEST(ConstructionQuarter, WeightHypothesisIsNeeded) {
  QuarterParams p;
  p.c = 2;
  p.r = 3;
  p.n = 4;
  p.g = 5;
  p.s = 0;
  p.base = all_ones_star(8);
  const ConstructionResult r = construction_quarter(p);
  EXPECT_FALSE(is_triangle_free(r.set));
  EXPECT_EQ(check_low_rank_restrictions(r.set, 3).verdict, Verdict::kFail);
}

TEST(ConstructionHalf, Examples) {
  HalfParams p;
  p.n = 3;
  p.base = PointSet(3, {});
  const ConstructionResult a = construction_half(p);
  EXPECT_EQ(a.set.size(), 8u);
  EXPECT_EQ(critical_number(a.set), 1);

  p.n = 4;
  p.base = PointSet(4, {0b1000, 0b0100, 0b0010, 0b0001});
  const ConstructionResult b = construction_half(p);
  EXPECT_EQ(b.set.size(), 20u);
  EXPECT_GE(critical_number(b.set), critical_number(*p.base));
  EXPECT_GE(BigInt(b.set.size()), BigInt(1) << 4);
}

TEST(ConstructionHalf, GeneratedBase) {
  HalfParams p;
  p.c = 2;
  p.r = 2;
  p.n = 8;
  const ConstructionResult r = construction_half(p);
  EXPECT_GE(girth(r.base).value_or(1000), 4);
  EXPECT_GE(critical_number(r.base), 2);
  EXPECT_EQ(r.set.size(), r.base.size() + 256);
}

TEST(EmbedMainlb, Examples) {
  EXPECT_EQ(embed_mainlb(pg(3), 2), pg(3));
  const PointSet m = embed_mainlb(pg(3), 3);
  EXPECT_EQ(m.size(), 15u);
  EXPECT_EQ(m.dim(), 4);
  EXPECT_THROW(embed_mainlb(PointSet(1, {}), 2), Error);
  EXPECT_THROW(embed_mainlb(PointSet(3, {1, 2}), 3), Error);
  EXPECT_THROW(embed_mainlb(pg(2), 1), Error);
}

TEST(EmbedMainlb, IdentityAndContainsBase) {
  Rng rng(51);
  for (int t = 0; t < 40; ++t) {
    const int n = 1 + static_cast<int>(rng.below(5));
    std::vector<Mask> xs;
    for (int i = 1; i <= n; ++i) xs.push_back(coordinate_bit(n, i));
    for (int k = 0; k < 6; ++k) xs.push_back(1 + static_cast<Mask>(rng.below(low_mask(n))));
    const PointSet base(n, xs);
    const int c = 2 + static_cast<int>(rng.below(3));
    const PointSet m = embed_mainlb(base, c);
    const int d = n + c - 2;
    EXPECT_EQ(m.dim(), d);
    EXPECT_EQ(m.size(), (std::size_t{1} << d) - 1 - ((std::size_t{1} << n) - 1) + base.size());
    const int shift = c - 2;
    for (Mask b : base.points()) EXPECT_TRUE(m.contains(b << shift));
    EXPECT_GE(critical_number(m), critical_number(base));
  }
}

TEST(NullspaceCount, Examples) {
  const NullspaceCount a =
      nullspace_count(Gf2Matrix::zero(1, 4), Gf2Vector(4, 0b0110), 2);
  EXPECT_EQ(a.count, 11);
  const NullspaceCount b =
      nullspace_count(Gf2Matrix::from_strings({"1111"}), Gf2Vector::zero(4), 2);
  EXPECT_EQ(b.count, 7);
  EXPECT_FALSE(b.hypothesis_met);
  const NullspaceCount c =
      nullspace_count(Gf2Matrix::from_strings({"10110010"}), Gf2Vector(8, 0b11000000), 2);
  EXPECT_TRUE(c.hypothesis_met);
  ASSERT_TRUE(c.bound.has_value());
  EXPECT_EQ(*c.bound, Rational(1));
  EXPECT_GE(Rational(c.count), *c.bound);
}

TEST(NullspaceCount, MatchesBruteForce) {
  Rng rng(52);
  for (int t = 0; t < 30; ++t) {
    const int n = 2 + static_cast<int>(rng.below(11));
    const int c = 1 + static_cast<int>(rng.below(3));
    std::vector<Mask> rows(c);
    for (Mask& r : rows) r = static_cast<Mask>(rng.below(std::uint64_t{1} << n));
    const Gf2Matrix w(n, rows);
    const Gf2Vector v(n, static_cast<Mask>(rng.below(std::uint64_t{1} << n)));
    const int s = static_cast<int>(rng.below(n + 1));
    std::uint64_t want = 0;
    for (Mask x = 0; x < (Mask{1} << n); ++x)
      if (weight(x) <= s && w.apply(x) == w.apply(v.bits())) ++want;
    EXPECT_EQ(nullspace_count(w, v, s).count, want);
  }
}

TEST(LowRankRestrictions, DetectsNonN0) {
  // PG(1,2) is N14, so it fails the all-N0 check.
  const Report r = check_low_rank_restrictions(PointSet(2, {1, 2, 3}), 2);
  EXPECT_EQ(r.verdict, Verdict::kFail);
  EXPECT_FALSE(r.witness.is_null());
}

}  // namespace
}  // namespace gf2crit
