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

#include <algorithm>
#include <array>
#include <string>

#include "gf2crit/matroid.h"
#include "gf2crit/random.h"

namespace gf2crit {
namespace {

using BinomialTable = std::array<std::array<std::uint64_t, kMaxDim + 1>, kMaxDim + 1>;

const BinomialTable& small_binomials() {
  static const BinomialTable table = [] {
    BinomialTable t{};
    for (int n = 0; n <= kMaxDim; ++n) {
      t[n][0] = 1;
      for (int k = 1; k <= n; ++k) t[n][k] = t[n - 1][k - 1] + (k < n ? t[n - 1][k] : 0);
    }
    return t;
  }();
  return table;
}

// Calls f(x) for every x in GF(2)^n of weight k, ascending.
template <typename F>
void for_each_of_weight(int n, int k, F&& f) {
  if (k < 0 || k > n) return;
  if (k == 0) {
    f(Mask{0});
    return;
  }
  Mask x = low_mask(k);
  const Mask limit = low_mask(n);
  while (true) {
    f(x);
    // Gosper's hack.
    const Mask c = x & (~x + 1);
    const std::uint64_t r = std::uint64_t{x} + c;
    if (r > limit) return;
    x = static_cast<Mask>((((r ^ x) >> 2) / c) | r);
    if (x > limit) return;
  }
}

// Uniform draws from the nonzero vectors of GF(2)^n with weight >= w.
class WeightFloorSampler {
 public:
  WeightFloorSampler(int n, int w) : n_(n), low_(std::max(w, 1)) {
    const auto& b = small_binomials();
    for (int k = low_; k <= n; ++k) total_ += b[n][k];
  }

  std::uint64_t population() const { return total_; }

  Mask draw(Rng& rng) const {
    const auto& b = small_binomials();
    std::uint64_t index = rng.below(total_);
    int k = low_;
    while (index >= b[n_][k]) index -= b[n_][k++];
    // Unrank index among the k-subsets of {0, ..., n-1} (combinatorial number
    // system).
    Mask x = 0;
    for (int p = n_ - 1; p >= 0 && k > 0; --p) {
      const std::uint64_t c = p >= k ? b[p][k] : 0;
      if (c <= index) {
        x |= Mask{1} << p;
        index -= c;
        --k;
      }
    }
    return x;
  }

 private:
  int n_;
  int low_;
  std::uint64_t total_ = 0;
};

Json points_json(const PointSet& x) {
  Json out = Json::array();
  for (Mask p : x.points()) out.push_back(to_bit_string(p, x.dim()));
  return out;
}

PointSet generate_base(int n, int g, int c, int w, int m, std::uint64_t seed,
                       int max_attempts, const CostLimits& limits) {
  GirthGenParams gp;
  gp.n = n;
  gp.g = g;
  gp.c = c;
  gp.w = std::max(w, 0);
  gp.m = m;
  gp.seed = seed;
  gp.max_attempts = max_attempts;
  return random_high_girth(gp, {}, limits).set;
}

}  // namespace

PointSet pg(int r) {
  require(r >= 1, ErrorCode::kInvalidArgument, "pg requires r >= 1");
  check_dim(r);
  std::vector<Mask> pts;
  for (Mask x = 1; x <= low_mask(r); ++x) pts.push_back(x);
  return PointSet(r, std::move(pts));
}

PointSet ag(int r) {
  require(r >= 1, ErrorCode::kInvalidArgument, "ag requires r >= 1");
  check_dim(r);
  std::vector<Mask> pts;
  const Mask first = coordinate_bit(r, 1);
  for (Mask y = 0; y < first; ++y) pts.push_back(first | y);
  return PointSet(r, std::move(pts));
}

PointSet mcn(const McnParams& p) {
  require(p.n >= 1 && p.c >= 0, ErrorCode::kInvalidArgument,
          "mcn requires n >= 1 and c >= 0");
  check_dim(p.n + 1);
  const Mask first = Mask{1} << p.n;
  std::vector<Mask> pts;
  for (int k = std::max(p.n - p.c + 1, 1); k <= p.n; ++k) {
    for_each_of_weight(p.n, k, [&](Mask tail) { pts.push_back(tail); });
  }
  // Total weight 1 + wt(tail) with 2 (1 + wt(tail)) <= n - c.
  for (int k = 0; 2 * (k + 1) <= p.n - p.c; ++k) {
    for_each_of_weight(p.n, k, [&](Mask tail) { pts.push_back(first | tail); });
  }
  return PointSet(p.n + 1, std::move(pts));
}

Subspace mcn_witness(const McnParams& p) {
  require(p.n >= 1 && p.c >= 0, ErrorCode::kInvalidArgument,
          "mcn requires n >= 1 and c >= 0");
  const int dim = p.n + 1;
  check_dim(dim);
  std::vector<Mask> gens;
  for (int i = 2; i <= p.n + 1 - p.c; ++i) gens.push_back(coordinate_bit(dim, i));
  return Subspace::span(dim, gens);
}

GirthGenParams GirthGenParams::coupled_preset(int n, int g, int c,
                                            std::uint64_t seed) {
  check_dim(n);
  require(g >= 1 && c >= 1, ErrorCode::kInvalidArgument,
          "coupled preset requires g >= 1 and c >= 1");
  GirthGenParams p;
  p.n = n;
  p.g = g;
  p.c = c;
  p.seed = seed;
  const int s = 2 * c * g;
  p.w = std::max(n - s, 0);
  const BigInt half = BigInt(WeightFloorSampler(n, p.w).population()) / 2;
  int m = 1;
  while (boost::multiprecision::pow(BigInt(m + 1), g) <= half) ++m;
  p.m = m;
  return p;
}

GenerationBudgetExhausted::GenerationBudgetExhausted(const GirthGenStats& stats)
    : Error(ErrorCode::kGenerationBudgetExhausted,
            "no verified set after " + std::to_string(stats.attempts) +
                " attempts (girth rejections " +
                std::to_string(stats.girth_rejections) +
                ", critical-number rejections " +
                std::to_string(stats.critical_rejections) +
                ", verifier rejections " +
                std::to_string(stats.verifier_rejections) + ")"),
      stats_(stats) {}

BigInt ordered_short_circuits(const PointSet& x, int g, const CostLimits& limits) {
  BigInt total = 0;
  BigInt factorial = 2;
  for (int k = 3; k < g; ++k) {
    factorial *= k;
    total += factorial * count_zero_sum_subsets(x, k, limits);
  }
  return total;
}

GirthGenResult random_high_girth(const GirthGenParams& p,
                                 const GirthGenHooks& hooks,
                                 const CostLimits& limits) {
  check_dim(p.n);
  require(p.n >= 1, ErrorCode::kInvalidArgument, "girthgen requires n >= 1");
  require(p.g >= 3, ErrorCode::kInvalidArgument, "girth target must be >= 3");
  require(p.c >= 1, ErrorCode::kInvalidArgument,
          "critical-number target must be >= 1");
  require(p.m >= 1, ErrorCode::kInvalidArgument, "sample count must be >= 1");
  require(p.c <= p.n, ErrorCode::kInvalidArgument,
          "critical-number target exceeds the dimension");
  require(p.w <= p.n, ErrorCode::kInvalidArgument,
          "weight floor exceeds the dimension");
  const WeightFloorSampler sampler(p.n, p.w);
  Rng rng(p.seed);
  GirthGenStats stats;
  for (int attempt = 0; attempt < p.max_attempts; ++attempt) {
    ++stats.attempts;
    std::vector<Mask> draws;
    draws.reserve(static_cast<std::size_t>(p.m));
    for (int i = 0; i < p.m; ++i) draws.push_back(sampler.draw(rng));
    PointSet z(p.n, std::move(draws));

    if (hooks.screen) {
      if (!hooks.screen(z)) {
        ++stats.girth_rejections;
        continue;
      }
    } else {
      if (ordered_short_circuits(z, p.g, limits) != 0) {
        ++stats.girth_rejections;
        continue;
      }
      if (count_disjoint_subspaces(z, p.c - 1, limits) != 0) {
        ++stats.critical_rejections;
        continue;
      }
    }
    if (hooks.corrupt) z = hooks.corrupt(z);

    const std::optional<int> gz = girth(z, limits);
    const bool girth_ok = !gz || *gz >= p.g;
    if (!girth_ok || !critical_number_at_least(z, p.c, limits)) {
      ++stats.verifier_rejections;
      continue;
    }
    return {std::move(z), stats};
  }
  throw GenerationBudgetExhausted(stats);
}

ConstructionResult construction_quarter(const QuarterParams& p,
                                        const CostLimits& limits) {
  require(p.n >= 1 && p.r >= 1 && p.c >= 1, ErrorCode::kInvalidArgument,
          "quarter requires n, r, c >= 1");
  const int dim = 2 * p.n + 1;
  check_dim(dim);
  const int g = p.g.value_or(p.r + 2);
  const int s = p.s.value_or(2 * p.c * g);
  PointSet base;
  if (p.base) {
    require(p.base->dim() == 2 * p.n, ErrorCode::kDimensionMismatch,
            "quarter base must live in GF(2)^{2n}");
    base = *p.base;
  } else {
    base = generate_base(2 * p.n, g, p.c, 2 * p.n - s, p.m > 0 ? p.m : 4 * p.n,
                         p.seed, p.max_attempts, limits);
  }
  std::vector<Mask> pts(base.points().begin(), base.points().end());
  const Mask first = Mask{1} << (2 * p.n);
  const int ymax = p.n - g * s;
  for (int k = 0; k <= ymax; ++k) {
    for_each_of_weight(2 * p.n, k, [&](Mask y) { pts.push_back(first | y); });
  }
  ConstructionResult out{PointSet(dim, std::move(pts)), base, {}};
  out.params = {{"kind", "quarter"}, {"c", p.c}, {"r", p.r}, {"n", p.n},
                {"g", g},            {"s", s},    {"y_max_weight", ymax},
                {"base", points_json(base)}};
  if (!p.base) out.params["seed"] = p.seed;
  return out;
}

ConstructionResult construction_half(const HalfParams& p, const CostLimits& limits) {
  require(p.n >= 1 && p.r >= 1 && p.c >= 1, ErrorCode::kInvalidArgument,
          "half requires n, r, c >= 1");
  const int dim = p.n + 1;
  check_dim(dim);
  const int g = p.g.value_or(p.r + 2);
  PointSet base;
  if (p.base) {
    require(p.base->dim() == p.n, ErrorCode::kDimensionMismatch,
            "half base must live in GF(2)^n");
    base = *p.base;
  } else {
    base = generate_base(p.n, g, p.c, 0, p.m > 0 ? p.m : 2 * p.n, p.seed,
                         p.max_attempts, limits);
  }
  std::vector<Mask> pts(base.points().begin(), base.points().end());
  const Mask first = Mask{1} << p.n;
  for (Mask y = 0; y < first; ++y) pts.push_back(first | y);
  ConstructionResult out{PointSet(dim, std::move(pts)), base, {}};
  out.params = {{"kind", "half"}, {"c", p.c}, {"r", p.r}, {"n", p.n},
                {"g", g},         {"base", points_json(base)}};
  if (!p.base) out.params["seed"] = p.seed;
  return out;
}

Report check_low_rank_restrictions(const PointSet& x, int r,
                                   const CostLimits& limits) {
  Report report;
  report.check = "low-rank-restrictions";
  report.params = {{"n", x.dim()}, {"size", x.size()}, {"r", r}};
  const int t = std::min(r, point_rank(x.points()));
  const int m = static_cast<int>(x.size());
  std::uint64_t flats = 0;
  std::uint64_t restrictions = 0;
  std::uint64_t crit2 = 0;
  if (t >= 1) {
    limits.require(binomial(m, t), "spanning subset enumeration", t);
    std::vector<Subspace> seen;
    std::vector<int> idx(static_cast<std::size_t>(t));
    for (int i = 0; i < t; ++i) idx[i] = i;
    const std::span<const Mask> pts = x.points();
    while (true) {
      std::vector<Mask> gens;
      for (int i : idx) gens.push_back(pts[i]);
      if (point_rank(gens) == t) {
        Subspace flat = Subspace::span(x.dim(), gens);
        if (std::find(seen.begin(), seen.end(), flat) == seen.end()) {
          std::vector<Mask> members;
          for (Mask p : pts) {
            if (flat.contains(p)) members.push_back(p);
          }
          seen.push_back(std::move(flat));
          ++flats;
          require(members.size() < 63, ErrorCode::kInvalidArgument,
                  "flat restriction too large to enumerate");
          limits.require(BigInt(1) << members.size(), "flat subset enumeration", t);
          for (std::uint64_t sub = 1; sub < (std::uint64_t{1} << members.size()); ++sub) {
            std::vector<Mask> chosen;
            for (std::size_t i = 0; i < members.size(); ++i) {
              if ((sub >> i) & 1) chosen.push_back(members[i]);
            }
            ++restrictions;
            PointSet rset(x.dim(), chosen);
            if (critical_number(rset, limits) != 2) continue;
            ++crit2;
            const Crit2Class cls = classify_crit2(rset, limits);
            if (cls.kind != Crit2Kind::kN0) {
              report.verdict = Verdict::kFail;
              report.witness = {{"restriction", points_json(rset)},
                                {"class", std::string(crit2_kind_name(cls.kind))}};
              report.details = {{"flats", flats},
                                {"restrictions", restrictions},
                                {"critical_two", crit2}};
              return report;
            }
          }
        }
      }
      int i = t - 1;
      while (i >= 0 && idx[i] == m - t + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < t; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  report.details = {{"flats", flats}, {"restrictions", restrictions},
                    {"critical_two", crit2}};
  return report;
}

PointSet embed_mainlb(const PointSet& m0, int c) {
  require(c >= 2, ErrorCode::kInvalidArgument, "embed requires c >= 2");
  const int n = m0.dim();
  if (n < 1 || point_rank(m0.points()) != n) {
    throw Error(ErrorCode::kRankDeficientBase,
                "base has rank " + std::to_string(point_rank(m0.points())) +
                    " in dimension " + std::to_string(n));
  }
  const int shift = c - 2;
  const int dim = n + shift;
  check_dim(dim);
  std::vector<Mask> pts;
  const Mask low = low_mask(shift);
  for (Mask v = 1; v <= low_mask(dim); ++v) {
    if (v & low) pts.push_back(v);
  }
  for (Mask p : m0.points()) pts.push_back(p << shift);
  return PointSet(dim, std::move(pts));
}

NullspaceCount nullspace_count(const Gf2Matrix& w, const Gf2Vector& v, int s,
                               const CostLimits& limits) {
  const int n = w.ncols();
  const int c = w.nrows();
  require(v.dim() == n, ErrorCode::kDimensionMismatch,
          "vector dimension differs from matrix width");
  require(s >= 0, ErrorCode::kInvalidArgument, "weight bound must be >= 0");
  check_dim(n);
  const int smax = std::min(s, n);
  BigInt candidates = 0;
  for (int i = 0; i <= smax; ++i) candidates += binomial(n, i);
  limits.require(candidates, "low-weight vector enumeration", s);
  const Mask target = w.apply(v.bits());
  std::uint64_t count = 0;
  for (int k = 0; k <= smax; ++k) {
    for_each_of_weight(n, k, [&](Mask x) {
      if (w.apply(x) == target) ++count;
    });
  }
  NullspaceCount out;
  out.count = count;
  if (s > 0) {
    out.bound = pow(Rational(BigInt(n), BigInt(s) << (c + 1)), s - c - 1);
  }
  out.hypothesis_met = BigInt(n) >= (BigInt(s) << (c + 1)) && s > c;
  return out;
}

}  // namespace gf2crit
