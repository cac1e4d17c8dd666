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

#include "gf2crit/harness.h"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <string>

#include "gf2crit/constructions.h"
#include "gf2crit/errors.h"
#include "gf2crit/matroid.h"
#include "gf2crit/random.h"
#include "gf2crit/spectrum.h"

namespace gf2crit {
namespace {

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double ms() const {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

Json bit_strings(std::span<const Mask> xs, int dim) {
  Json out = Json::array();
  for (Mask x : xs) out.push_back(to_bit_string(x, dim));
  return out;
}

VectorSet random_subset_of_size(int n, std::size_t size, Rng& rng) {
  std::vector<Mask> all(std::size_t{1} << n);
  std::iota(all.begin(), all.end(), Mask{0});
  for (std::size_t i = 0; i < size; ++i) {
    const std::size_t j = i + rng.below(all.size() - i);
    std::swap(all[i], all[j]);
  }
  all.resize(size);
  return VectorSet(n, std::move(all));
}

VectorSet random_bernoulli(int n, int eighths, Rng& rng) {
  std::vector<Mask> out;
  for (Mask x = 0; x < (Mask{1} << n); ++x) {
    if (static_cast<int>(rng.below(8)) < eighths) out.push_back(x);
  }
  return VectorSet(n, std::move(out));
}

// First nonzero v with no completion in X, or 0 if every v has one.
Mask first_uncompleted(const VectorSet& x, const std::vector<std::uint8_t>& ind) {
  for (Mask v = 1; v < (Mask{1} << x.dim()); ++v) {
    bool found = false;
    for (Mask a : x.elements()) {
      if (ind[a ^ v]) {
        found = true;
        break;
      }
    }
    if (!found) return v;
  }
  return 0;
}

void require_eps(const Rational& eps) {
  if (!(eps > 0 && eps < Rational(1, 2))) {
    throw Error(ErrorCode::kInvalidArgument,
                "eps must satisfy 0 < eps < 1/2, got " + to_string(eps));
  }
}

}  // namespace

Report check_trifreevectors(const VectorSet& x) {
  Stopwatch clock;
  Report report;
  report.check = "trifreevectors";
  const int n = x.dim();
  report.params = {{"n", n}, {"size", x.size()}};
  const std::uint64_t half = std::uint64_t{1} << (n > 0 ? n - 1 : 0);
  const bool hypothesis = n >= 1 && x.size() > half;
  std::uint64_t min_pairs = UINT64_MAX;
  std::uint64_t max_pairs = 0;
  Mask missing = 0;
  for (Mask v = 1; v < (Mask{1} << n); ++v) {
    const std::uint64_t pairs = pair_completions(x, Gf2Vector(n, v));
    min_pairs = std::min(min_pairs, pairs);
    max_pairs = std::max(max_pairs, pairs);
    if (pairs == 0 && missing == 0) missing = v;
  }
  if (n >= 1) report.details = {{"min_pairs", min_pairs}, {"max_pairs", max_pairs}};
  if (!hypothesis) {
    report.verdict = Verdict::kHypothesisNotMet;
    if (missing != 0) report.witness = {{"v", to_bit_string(missing, n)}};
  } else if (missing != 0) {
    report.verdict = Verdict::kFail;
    report.witness = {{"v", to_bit_string(missing, n)},
                      {"set", bit_strings(x.elements(), n)}};
  }
  report.wall_time_ms = clock.ms();
  return report;
}

Report verify_trifreevectors(int n, int trials, std::uint64_t seed) {
  Stopwatch clock;
  require(n >= 1 && n <= 12, ErrorCode::kInvalidArgument,
          "trifreevectors requires 1 <= n <= 12");
  require(trials >= 0, ErrorCode::kInvalidArgument, "trials must be >= 0");
  Report report;
  report.check = "trifreevectors";
  report.seed = seed;
  const std::size_t size = (std::size_t{1} << (n - 1)) + 1;
  report.params = {{"n", n}, {"trials", trials}, {"set_size", size}};
  Rng rng(seed);
  int checked = 0;
  for (int t = 0; t < trials; ++t) {
    const VectorSet x = random_subset_of_size(n, size, rng);
    ++checked;
    const Mask v = first_uncompleted(x, x.indicator());
    if (v != 0) {
      report.verdict = Verdict::kFail;
      report.witness = {{"trial", t},
                        {"v", to_bit_string(v, n)},
                        {"set", bit_strings(x.elements(), n)}};
      break;
    }
  }
  report.details = {{"trials_checked", checked}};
  report.wall_time_ms = clock.ms();
  return report;
}

Report verify_sumlemma(int n, const Rational& eps, int trials, std::uint64_t seed) {
  Stopwatch clock;
  require_eps(eps);
  require(n >= 1 && n <= 14, ErrorCode::kInvalidArgument,
          "sumlemma requires 1 <= n <= 14");
  require(trials >= 0, ErrorCode::kInvalidArgument, "trials must be >= 0");
  Report report;
  report.check = "sumlemma";
  report.seed = seed;
  report.params = {{"n", n}, {"eps", to_string(eps)}, {"trials", trials}};
  Rng rng(seed);
  int passed = 0;
  int skipped = 0;
  for (int t = 0; t < trials; ++t) {
    const VectorSet a1 = random_bernoulli(n, 1 + static_cast<int>(rng.below(7)), rng);
    const VectorSet a2 = random_bernoulli(n, 1 + static_cast<int>(rng.below(7)), rng);
    const VectorSet a3 = random_bernoulli(n, 1 + static_cast<int>(rng.below(7)), rng);
    const Report r = check_sumlemma(a1, a2, a3, eps);
    if (r.verdict == Verdict::kHypothesisNotMet) {
      ++skipped;
    } else if (r.verdict == Verdict::kPass) {
      ++passed;
    } else {
      report.verdict = Verdict::kFail;
      report.witness = {{"trial", t},
                        {"a1", bit_strings(a1.elements(), n)},
                        {"a2", bit_strings(a2.elements(), n)},
                        {"a3", bit_strings(a3.elements(), n)},
                        {"count", r.details["count"]},
                        {"bound", r.details["bound"]}};
      break;
    }
  }
  if (report.verdict == Verdict::kPass && passed == 0 && trials > 0) {
    report.verdict = Verdict::kHypothesisNotMet;
  }
  report.details = {{"passed", passed}, {"hypothesis_not_met", skipped}};
  report.wall_time_ms = clock.ms();
  return report;
}

Report verify_mcn(int c, int n_from, int n_to, const CostLimits& limits) {
  Stopwatch clock;
  require(c >= 0 && n_from >= 1 && n_from <= n_to, ErrorCode::kInvalidArgument,
          "mcn sweep requires c >= 0 and 1 <= n_from <= n_to");
  check_dim(n_to + 1);
  Report report;
  report.check = "mcn";
  report.params = {{"c", c}, {"n_from", n_from}, {"n_to", n_to}};
  Json rows = Json::array();
  std::optional<int> first_exact;
  std::optional<Rational> previous_gap;
  bool monotone = true;
  for (int n = n_from; n <= n_to; ++n) {
    const McnParams p{c, n};
    const PointSet m = mcn(p);
    const Mask first = Mask{1} << n;
    std::vector<Mask> xs;
    std::vector<Mask> ys;
    for (Mask v : m.points()) ((v & first) ? ys : xs).push_back(v);

    const std::uint64_t triangles = triangle_count(m);
    bool sumsets_empty = true;
    for (std::size_t i = 0; i < xs.size() && sumsets_empty; ++i) {
      for (std::size_t j = i + 1; j < xs.size(); ++j) {
        if (m.contains(xs[i] ^ xs[j])) {
          sumsets_empty = false;
          break;
        }
      }
    }
    for (std::size_t i = 0; i < ys.size() && sumsets_empty; ++i) {
      for (std::size_t j = i + 1; j < ys.size(); ++j) {
        if (m.contains(ys[i] ^ ys[j])) {
          sumsets_empty = false;
          break;
        }
      }
    }
    for (std::size_t i = 0; i < xs.size() && sumsets_empty; ++i) {
      for (Mask y : ys) {
        if (m.contains(xs[i] ^ y)) {
          sumsets_empty = false;
          break;
        }
      }
    }
    const Subspace witness = mcn_witness(p);
    const bool witness_ok = is_disjoint(m, witness);
    const int chi = witness_ok ? critical_number_given_witness(m, witness, limits)
                               : critical_number(m, limits);
    const Rational dens = density(m);
    const Rational gap = abs(dens - Rational(1, 4));
    if (previous_gap && gap > *previous_gap) monotone = false;
    previous_gap = gap;
    if (chi == c + 1 && !first_exact) first_exact = n;

    rows.push_back({{"n", n},
                    {"size", m.size()},
                    {"rank", point_rank(m.points())},
                    {"triangles", triangles},
                    {"sumsets_empty", sumsets_empty},
                    {"witness_codim", witness.codim()},
                    {"witness_disjoint", witness_ok},
                    {"chi", chi},
                    {"density", to_string(dens)},
                    {"above_3c", n > 3 * c}});
    if (report.verdict == Verdict::kPass &&
        (triangles != 0 || !sumsets_empty || !witness_ok)) {
      report.verdict = Verdict::kFail;
      report.witness = {{"n", n},
                        {"triangles", triangles},
                        {"sumsets_empty", sumsets_empty},
                        {"witness_disjoint", witness_ok}};
    }
  }
  report.details = {{"rows", rows},
                    {"smallest_n_with_chi_c_plus_1",
                     first_exact ? Json(*first_exact) : Json(nullptr)},
                    {"density_gap_nonincreasing", monotone}};
  report.wall_time_ms = clock.ms();
  return report;
}

Report verify_nullspace(int c, int s, int n, int trials, std::uint64_t seed,
                        const CostLimits& limits) {
  Stopwatch clock;
  require(c >= 1 && c <= n && s >= 0, ErrorCode::kInvalidArgument,
          "nullspace requires 1 <= c <= n and s >= 0");
  check_dim(n);
  Report report;
  report.check = "nullspace";
  report.seed = seed;
  report.params = {{"c", c}, {"s", s}, {"n", n}, {"trials", trials}};
  Rng rng(seed);
  int checked = 0;
  bool hypothesis = false;
  Json bound_json = nullptr;
  BigInt min_count = -1;
  for (int t = 0; t < trials; ++t) {
    std::vector<Mask> rows;
    const bool full = t % 2 == 0;
    do {
      rows.clear();
      for (int i = 0; i < c; ++i) rows.push_back(static_cast<Mask>(rng.next()) & low_mask(n));
      if (!full) {
        Mask sum = 0;
        for (int i = 0; i + 1 < c; ++i) sum ^= rows[i];
        rows.back() = sum;
      }
    } while (full && rank_of(rows) != c);
    const Gf2Matrix w(n, rows);
    const Gf2Vector v(n, static_cast<Mask>(rng.next()) & low_mask(n));
    const NullspaceCount r = nullspace_count(w, v, s, limits);
    ++checked;
    hypothesis = r.hypothesis_met;
    if (r.bound) bound_json = to_string(*r.bound);
    if (min_count < 0 || r.count < min_count) min_count = r.count;
    if (r.hypothesis_met && r.bound && Rational(r.count) < *r.bound) {
      report.verdict = Verdict::kFail;
      report.witness = {{"trial", t},
                        {"w", bit_strings(rows, n)},
                        {"v", v.to_string()},
                        {"count", to_string(r.count)},
                        {"bound", to_string(*r.bound)}};
      break;
    }
  }
  if (report.verdict == Verdict::kPass && !hypothesis) {
    report.verdict = Verdict::kHypothesisNotMet;
  }
  report.details = {{"trials_checked", checked},
                    {"hypothesis_met", hypothesis},
                    {"bound", bound_json},
                    {"min_count", min_count < 0 ? Json(nullptr) : Json(to_string(min_count))}};
  report.wall_time_ms = clock.ms();
  return report;
}

Report verify_threshold_examples(int r_cap, const CostLimits& limits) {
  Stopwatch clock;
  require(r_cap >= 1, ErrorCode::kInvalidArgument, "r_cap must be >= 1");
  check_dim(r_cap + 2);
  Report report;
  report.check = "threshold";
  constexpr std::uint64_t kSeed = 0x5EED;
  report.params = {{"r_cap", r_cap}, {"base_seed", kSeed}};

  std::vector<PointSet> bases;
  for (int n = 1; n <= std::min(r_cap, 3); ++n) {
    const std::uint32_t count = (1u << ((1u << n) - 1));
    for (std::uint32_t sub = 1; sub < count; ++sub) {
      std::vector<Mask> pts;
      for (Mask v = 1; v < (Mask{1} << n); ++v) {
        if ((sub >> (v - 1)) & 1) pts.push_back(v);
      }
      if (point_rank(pts) == n) bases.emplace_back(n, std::move(pts));
    }
  }
  Rng rng(kSeed);
  for (int n = 4; n <= r_cap; ++n) {
    bases.push_back(pg(n));
    bases.push_back(ag(n));
    std::vector<Mask> unit;
    for (int i = 1; i <= n; ++i) unit.push_back(coordinate_bit(n, i));
    bases.emplace_back(n, unit);
    for (int k = 0; k < 3; ++k) {
      std::vector<Mask> pts = unit;
      const int extra = 1 + static_cast<int>(rng.below(std::uint64_t{1} << (n - 1)));
      for (int i = 0; i < extra; ++i) {
        const Mask v = static_cast<Mask>(rng.below((std::uint64_t{1} << n) - 1)) + 1;
        pts.push_back(v);
      }
      bases.emplace_back(n, std::move(pts));
    }
  }

  std::uint64_t embeddings = 0;
  for (const PointSet& base : bases) {
    const int n = base.dim();
    const int chi0 = critical_number(base, limits);
    for (int c = 2; c <= 4; ++c) {
      const PointSet m = embed_mainlb(base, c);
      ++embeddings;
      const BigInt expected = ((BigInt(1) << (n + c - 2)) - 1) - ((BigInt(1) << n) - 1) +
                              BigInt(base.size());
      const int chi = critical_number(m, limits);
      if (BigInt(m.size()) != expected || chi < chi0) {
        report.verdict = Verdict::kFail;
        report.witness = {{"base", bit_strings(base.points(), n)},
                          {"c", c},
                          {"size", m.size()},
                          {"expected_size", to_string(expected)},
                          {"chi", chi},
                          {"base_chi", chi0}};
        report.details = {{"embeddings", embeddings}};
        report.wall_time_ms = clock.ms();
        return report;
      }
    }
  }

  // PG(r-1, 2) minus a codimension-(t-1) flat: density 1 - 2^{1-t}, no
  // PG(t-1, 2) restriction, critical number t - 1.
  Json flats = Json::array();
  for (int r = 2; r <= r_cap; ++r) {
    for (int t = 2; t <= r; ++t) {
      const Mask flat_support = low_mask(r - t + 1);
      std::vector<Mask> pts;
      for (Mask v = 1; v <= low_mask(r); ++v) {
        if (v & ~flat_support) pts.push_back(v);
      }
      const PointSet m(r, std::move(pts));
      const BigInt expected = (BigInt(1) << r) - (BigInt(1) << (r - t + 1));
      const int largest = max_contained_subspace_dim(m, limits);
      const int chi = critical_number(m, limits);
      const Rational dens = density(m);
      const bool ok = BigInt(m.size()) == expected && largest < t && chi == t - 1 &&
                      dens == 1 - pow2(1 - t);
      flats.push_back({{"r", r}, {"t", t}, {"density", to_string(dens)},
                       {"chi", chi}, {"largest_subspace", largest}});
      if (!ok && report.verdict == Verdict::kPass) {
        report.verdict = Verdict::kFail;
        report.witness = {{"r", r}, {"t", t}, {"size", m.size()},
                          {"largest_subspace", largest}, {"chi", chi}};
      }
    }
  }
  report.details = {{"bases", bases.size()}, {"embeddings", embeddings},
                    {"flat_complements", flats}};
  report.wall_time_ms = clock.ms();
  return report;
}

}  // namespace gf2crit
