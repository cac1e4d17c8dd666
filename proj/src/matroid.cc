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

#include "gf2crit/matroid.h"

#include <algorithm>
#include <bit>
#include <limits>
#include <string>
#include <unordered_map>
#include <utility>

#include "gf2crit/errors.h"
#include "gf2crit/spectrum.h"

namespace gf2crit {
namespace {

constexpr int kSpectrumDimMax = 22;

// X re-expressed in coordinates of its own span.
struct SpanCoordinates {
  Subspace span;
  std::vector<Mask> coords;
  int rank() const { return span.dim(); }
};

SpanCoordinates to_span_coordinates(const VectorSet& x) {
  SpanCoordinates out{Subspace::span(x.dim(), x.elements()), {}};
  out.coords.reserve(x.size());
  for (Mask p : x.elements()) out.coords.push_back(out.span.coordinates(p));
  std::sort(out.coords.begin(), out.coords.end());
  return out;
}

// Decides, for each c-dimensional W in the dual, whether W^⊥ misses X.
class DisjointnessTest {
 public:
  DisjointnessTest(int dim, std::span<const Mask> points)
      : points_(points) {
    if (dim <= kSpectrumDimMax && !points.empty()) {
      const Spectrum s =
          compute_spectrum(VectorSet(dim, {points.begin(), points.end()}));
      spectrum_.assign(s.table().begin(), s.table().end());
    }
  }

  bool misses(std::span<const Mask> w) const {
    if (points_.empty()) return true;
    if (!spectrum_.empty() && (std::size_t{1} << w.size()) <= points_.size()) {
      // |X ∩ W^⊥| = 2^{-c} Σ_{u ∈ W} F_X(u).
      std::int64_t sum = 0;
      Mask u = 0;
      const std::uint64_t count = std::uint64_t{1} << w.size();
      for (std::uint64_t i = 0; i < count; ++i) {
        if (i != 0) u ^= w[std::countr_zero(i)];
        sum += spectrum_[u];
      }
      return sum == 0;
    }
    for (Mask x : points_) {
      bool nonzero = false;
      for (Mask row : w) {
        if (dot(x, row)) {
          nonzero = true;
          break;
        }
      }
      if (!nonzero) return false;
    }
    return true;
  }

 private:
  std::span<const Mask> points_;
  std::vector<std::int32_t> spectrum_;
};

bool has_disjoint_at_codim(const DisjointnessTest& test, int dim, int c,
                           const CostLimits& limits) {
  SubspaceEnumerator it(dim, c, limits);
  while (it.next()) {
    if (test.misses(it.basis())) return true;
  }
  return false;
}

int ascend(const SpanCoordinates& sc, int upper, const CostLimits& limits) {
  const DisjointnessTest test(sc.rank(), sc.coords);
  for (int c = 1; c < upper; ++c) {
    if (has_disjoint_at_codim(test, sc.rank(), c, limits)) return c;
  }
  return upper;
}

std::vector<Mask> span_complement(const SpanCoordinates& sc) {
  std::vector<Mask> out;
  const std::uint64_t size = std::uint64_t{1} << sc.rank();
  std::size_t j = 0;
  for (std::uint64_t v = 1; v < size; ++v) {
    while (j < sc.coords.size() && sc.coords[j] < v) ++j;
    if (j < sc.coords.size() && sc.coords[j] == v) continue;
    out.push_back(static_cast<Mask>(v));
  }
  return out;
}

class ContainedSubspaceSearch {
 public:
  explicit ContainedSubspaceSearch(const CostLimits& limits) : limits_(limits) {}

  int run(std::vector<Mask> s) {
    s.erase(std::remove(s.begin(), s.end(), Mask{0}), s.end());
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    std::vector<Mask> u{0};
    search(u, std::move(s));
    return best_;
  }

 private:
  // Largest D with 2^D - |U| <= |cand|.
  static int bound(std::size_t u_size, std::size_t cand_size) {
    return std::bit_width(u_size + cand_size) - 1;
  }

  // cand = {w : w + U ⊆ S}, a union of cosets of U.
  void search(const std::vector<Mask>& u, std::vector<Mask> cand) {
    if (++nodes_ > limits_.ceiling) {
      throw CostCeilingExceeded("contained-subspace search nodes",
                                std::to_string(nodes_),
                                std::to_string(limits_.ceiling), best_);
    }
    const int d = std::countr_zero(u.size());
    best_ = std::max(best_, d);
    while (!cand.empty() && bound(u.size(), cand.size()) > best_) {
      const Mask v = cand.front();
      std::vector<Mask> next;
      for (Mask w : cand) {
        if (std::binary_search(cand.begin(), cand.end(), w ^ v)) next.push_back(w);
      }
      std::vector<Mask> coset;
      coset.reserve(u.size());
      for (Mask h : u) coset.push_back(h ^ v);
      std::vector<Mask> grown = u;
      grown.insert(grown.end(), coset.begin(), coset.end());
      // Elements of v + U are gone from `next` already: (v + h) + v = h is
      // never a candidate.
      search(grown, std::move(next));
      std::sort(coset.begin(), coset.end());
      std::vector<Mask> rest;
      rest.reserve(cand.size());
      std::set_difference(cand.begin(), cand.end(), coset.begin(), coset.end(),
                          std::back_inserter(rest));
      cand = std::move(rest);
    }
  }

  const CostLimits& limits_;
  std::uint64_t nodes_ = 0;
  int best_ = 0;
};

struct CircuitSizes {
  std::optional<int> girth;
  std::optional<int> odd;
};

CircuitSizes gray_code_circuits(std::span<const Mask> pts) {
  const int m = static_cast<int>(pts.size());
  int best = std::numeric_limits<int>::max();
  int best_odd = std::numeric_limits<int>::max();
  Mask sum = 0;
  int size = 0;
  std::uint64_t gray = 0;
  for (std::uint64_t i = 1; i < (std::uint64_t{1} << m); ++i) {
    const int bit = std::countr_zero(i);
    gray ^= std::uint64_t{1} << bit;
    sum ^= pts[bit];
    size += (gray >> bit) & 1 ? 1 : -1;
    if (sum == 0) {
      best = std::min(best, size);
      if (size & 1) best_odd = std::min(best_odd, size);
    }
  }
  CircuitSizes out;
  if (best != std::numeric_limits<int>::max()) out.girth = best;
  if (best_odd != std::numeric_limits<int>::max()) out.odd = best_odd;
  return out;
}

// Calls f(indices, sum) for every t-subset of pts, indices increasing.
template <typename F>
void for_each_subset(std::span<const Mask> pts, int t, F&& f) {
  const int m = static_cast<int>(pts.size());
  if (t > m) return;
  std::vector<int> idx(static_cast<std::size_t>(t));
  for (int i = 0; i < t; ++i) idx[i] = i;
  while (true) {
    Mask sum = 0;
    for (int i : idx) sum ^= pts[i];
    f(std::as_const(idx), sum);
    int i = t - 1;
    while (i >= 0 && idx[i] == m - t + i) --i;
    if (i < 0) return;
    ++idx[i];
    for (int j = i + 1; j < t; ++j) idx[j] = idx[j - 1] + 1;
  }
}

// Two subsets with equal sums differ by a zero-sum set. Keeping the smallest
// subset per (sum, size parity) and growing the subset size one level at a
// time finds every circuit of size <= 2t by level t.
CircuitSizes meet_in_middle_circuits(std::span<const Mask> pts, int rank,
                                     bool need_girth, bool need_odd,
                                     const CostLimits& limits) {
  const int m = static_cast<int>(pts.size());
  const int t_max = std::min(m, (rank + 2) / 2);
  std::unordered_map<std::uint32_t, std::uint64_t> reps;
  auto key = [](Mask sum, int par) { return (sum << 1) | static_cast<Mask>(par); };
  reps[key(0, 0)] = 0;
  int best = std::numeric_limits<int>::max();
  int best_odd = std::numeric_limits<int>::max();
  BigInt examined = 1;
  for (int t = 1; t <= t_max; ++t) {
    examined += binomial(m, t);
    limits.require(examined, "circuit search subsets", t);
    const int par = t & 1;
    for_each_subset(pts, t, [&](const std::vector<int>& idx, Mask sum) {
      std::uint64_t mask = 0;
      for (int i : idx) mask |= std::uint64_t{1} << i;
      const auto same = reps.find(key(sum, par));
      if (same != reps.end()) {
        if (same->second != mask) best = std::min(best, std::popcount(same->second ^ mask));
      } else {
        reps.emplace(key(sum, par), mask);
      }
      const auto other = reps.find(key(sum, par ^ 1));
      if (other != reps.end()) {
        const int size = std::popcount(other->second ^ mask);
        best = std::min(best, size);
        best_odd = std::min(best_odd, size);
      }
    });
    const bool girth_done = !need_girth || best <= 2 * t;
    const bool odd_done = !need_odd || best_odd <= 2 * t;
    if (girth_done && odd_done) break;
  }
  CircuitSizes out;
  if (best != std::numeric_limits<int>::max()) out.girth = best;
  if (best_odd != std::numeric_limits<int>::max()) out.odd = best_odd;
  return out;
}

CircuitSizes circuit_sizes(const PointSet& x, bool need_girth, bool need_odd,
                           const CostLimits& limits) {
  const std::span<const Mask> pts = x.points();
  const int rank = point_rank(pts);
  if (rank == static_cast<int>(pts.size())) return {};
  const int m = static_cast<int>(pts.size());
  if (m <= limits.exhaustive_circuit_max) return gray_code_circuits(pts);
  if (triangle_count(x) > 0) return {3, 3};
  if (m > limits.mitm_circuit_max) {
    throw CostCeilingExceeded("circuit search set size", std::to_string(m),
                              std::to_string(limits.mitm_circuit_max), -1);
  }
  return meet_in_middle_circuits(pts, rank, need_girth, need_odd, limits);
}

// Echelon rows over an independent set, each tagged with the subset of the
// set it is the sum of.
struct TaggedBasis {
  std::vector<std::pair<Mask, std::uint32_t>> rows;  // pivots descending

  void insert(Mask v, std::uint32_t tag) {
    reduce(v, tag);
    if (v == 0) return;
    rows.emplace_back(v, tag);
    std::sort(rows.begin(), rows.end(),
              [](const auto& a, const auto& b) { return a.first > b.first; });
  }

  void reduce(Mask& v, std::uint32_t& tag) const {
    for (const auto& [row, row_tag] : rows) {
      if (v & top_bit(row)) {
        v ^= row;
        tag ^= row_tag;
      }
    }
  }
};

// S = X ∩ H independent for a hyperplane H of span(X). An odd circuit C then
// has |C \ S| even; with |C \ S| = 2 it is {a, b} plus an odd subset of S
// summing to a + b.
bool hyperplane_n0_condition(std::span<const Mask> s, std::span<const Mask> outside) {
  TaggedBasis basis;
  for (std::size_t i = 0; i < s.size(); ++i) {
    basis.insert(s[i], std::uint32_t{1} << i);
  }
  std::vector<std::pair<Mask, int>> residues;
  residues.reserve(outside.size());
  for (Mask a : outside) {
    Mask v = a;
    std::uint32_t tag = 0;
    basis.reduce(v, tag);
    residues.emplace_back(v, std::popcount(tag) & 1);
  }
  std::sort(residues.begin(), residues.end());
  for (std::size_t i = 1; i < residues.size(); ++i) {
    if (residues[i].first == residues[i - 1].first &&
        residues[i].second != residues[i - 1].second) {
      return false;
    }
  }
  return true;
}

// S independent, arbitrary position. Every circuit C is determined by
// A = C \ S, since C ∩ S is the unique subset of S summing to the sum of A.
// Tries each A with 1 <= |A| <= 3 and tests whether A ∪ T is an odd circuit.
bool general_n0_condition(std::span<const Mask> s, std::span<const Mask> outside) {
  TaggedBasis basis;
  for (std::size_t i = 0; i < s.size(); ++i) {
    basis.insert(s[i], std::uint32_t{1} << i);
  }
  const std::size_t m = outside.size();
  auto odd_circuit = [&](std::initializer_list<std::size_t> picks) {
    Mask v = 0;
    for (std::size_t i : picks) v ^= outside[i];
    std::uint32_t tag = 0;
    basis.reduce(v, tag);
    if (v != 0) return false;
    const int size = static_cast<int>(picks.size()) + std::popcount(tag);
    if (size % 2 == 0) return false;
    std::vector<Mask> c;
    for (std::size_t i : picks) c.push_back(outside[i]);
    for (std::size_t i = 0; i < s.size(); ++i) {
      if ((tag >> i) & 1) c.push_back(s[i]);
    }
    return rank_of(c) == size - 1;
  };
  for (std::size_t i = 0; i < m; ++i) {
    if (odd_circuit({i})) return false;
    for (std::size_t j = i + 1; j < m; ++j) {
      if (odd_circuit({i, j})) return false;
      for (std::size_t k = j + 1; k < m; ++k) {
        if (odd_circuit({i, j, k})) return false;
      }
    }
  }
  return true;
}

}  // namespace

int point_rank(std::span<const Mask> points) { return rank_of(points); }

bool is_disjoint(const VectorSet& x, const Subspace& h) {
  require(x.dim() == h.ambient_dim(), ErrorCode::kDimensionMismatch,
          "set and subspace dimensions differ");
  for (Mask p : x.elements()) {
    if (h.contains(p)) return false;
  }
  return true;
}

int critical_number(const PointSet& x, const CostLimits& limits) {
  if (x.empty()) return 0;
  const SpanCoordinates sc = to_span_coordinates(x);
  const int r = sc.rank();
  const std::uint64_t complement = (std::uint64_t{1} << r) - 1 - x.size();
  if (complement < x.size()) {
    ContainedSubspaceSearch search(limits);
    return r - search.run(span_complement(sc));
  }
  return ascend(sc, r, limits);
}

bool critical_number_at_least(const PointSet& x, int c, const CostLimits& limits) {
  if (c <= 0) return true;
  if (x.empty()) return false;
  const SpanCoordinates sc = to_span_coordinates(x);
  if (c > sc.rank()) return false;
  return ascend(sc, c, limits) == c;
}

int critical_number_given_witness(const PointSet& x, const Subspace& witness,
                                  const CostLimits& limits) {
  require(is_disjoint(x, witness), ErrorCode::kInvalidArgument,
          "witness subspace meets the point set");
  if (x.empty()) return 0;
  const SpanCoordinates sc = to_span_coordinates(x);
  return ascend(sc, std::min(witness.codim(), sc.rank()), limits);
}

int max_contained_subspace_dim(const VectorSet& s, const CostLimits& limits) {
  ContainedSubspaceSearch search(limits);
  return search.run({s.elements().begin(), s.elements().end()});
}

std::uint64_t count_disjoint_subspaces(const PointSet& x, int codim,
                                       const CostLimits& limits) {
  require(codim >= 0 && codim <= x.dim(), ErrorCode::kInvalidArgument,
          "codimension " + std::to_string(codim) + " outside [0, " +
              std::to_string(x.dim()) + "]");
  const DisjointnessTest test(x.dim(), x.points());
  SubspaceEnumerator it(x.dim(), codim, limits);
  std::uint64_t count = 0;
  while (it.next()) {
    if (test.misses(it.basis())) ++count;
  }
  return count;
}

std::optional<int> girth(const PointSet& x, const CostLimits& limits) {
  return circuit_sizes(x, true, false, limits).girth;
}

std::optional<int> min_odd_circuit(const PointSet& x, const CostLimits& limits) {
  return circuit_sizes(x, false, true, limits).odd;
}

std::uint64_t count_zero_sum_subsets(const PointSet& x, int k,
                                     const CostLimits& limits) {
  require(k >= 1, ErrorCode::kInvalidArgument, "subset size must be positive");
  const std::span<const Mask> pts = x.points();
  if (k == 1 || k > static_cast<int>(pts.size())) return 0;
  limits.require(binomial(static_cast<int>(pts.size()), k - 1),
                 "zero-sum subset enumeration", k);
  std::uint64_t count = 0;
  for_each_subset(pts, k - 1, [&](const std::vector<int>& idx, Mask sum) {
    const auto it = std::lower_bound(pts.begin(), pts.end(), sum);
    if (it == pts.end() || *it != sum) return;
    if (it - pts.begin() > idx.back()) ++count;
  });
  return count;
}

bool is_triangle_free(const PointSet& x) { return triangle_count(x) == 0; }

Rational density(const PointSet& x) {
  return Rational(BigInt(x.size()), BigInt(1) << point_rank(x.points()));
}

std::vector<FlatRestriction> codim_flats(const PointSet& x, int k,
                                         const CostLimits& limits) {
  require(k >= 0 && k <= x.dim(), ErrorCode::kInvalidArgument,
          "codimension " + std::to_string(k) + " outside [0, " +
              std::to_string(x.dim()) + "]");
  std::vector<FlatRestriction> out;
  SubspaceEnumerator it(x.dim(), k, limits);
  while (it.next()) {
    FlatRestriction flat{orthogonal_complement(it.subspace()), {}};
    for (Mask p : x.points()) {
      if (flat.flat.contains(p)) flat.members.push_back(p);
    }
    out.push_back(std::move(flat));
  }
  return out;
}

bool is_independent(const PointSet& x, std::span<const Mask> subset) {
  for (Mask p : subset) {
    if (!x.contains(p)) {
      throw Error(ErrorCode::kSubsetNotContained,
                  "vector " + to_bit_string(p, x.dim()) + " is not a point");
    }
  }
  std::vector<Mask> distinct(subset.begin(), subset.end());
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  return point_rank(distinct) == static_cast<int>(distinct.size());
}

std::string_view crit2_kind_name(Crit2Kind kind) {
  switch (kind) {
    case Crit2Kind::kN0: return "N0";
    case Crit2Kind::kN14: return "N14";
    case Crit2Kind::kN12: return "N12";
  }
  return "unknown";
}

bool satisfies_n0(const PointSet& x, std::span<const Mask> s) {
  if (!is_independent(x, s)) return false;
  std::vector<Mask> inside(s.begin(), s.end());
  std::sort(inside.begin(), inside.end());
  inside.erase(std::unique(inside.begin(), inside.end()), inside.end());
  std::vector<Mask> outside;
  for (Mask p : x.points()) {
    if (!std::binary_search(inside.begin(), inside.end(), p)) outside.push_back(p);
  }
  return general_n0_condition(inside, outside);
}

Crit2Class classify_crit2(const PointSet& x, const CostLimits& limits) {
  const int chi = critical_number(x, limits);
  if (chi != 2) {
    throw Error(ErrorCode::kNotCriticalTwo,
                "critical number is " + std::to_string(chi) + ", not 2");
  }
  const SpanCoordinates sc = to_span_coordinates(x);
  const int r = sc.rank();
  std::optional<FlatRestriction> first_independent;
  SubspaceEnumerator it(r, 1, limits);
  while (it.next()) {
    const Mask normal = it.basis()[0];
    std::vector<Mask> inside;
    std::vector<Mask> outside;
    for (Mask p : x.points()) {
      (dot(sc.span.coordinates(p), normal) ? outside : inside).push_back(p);
    }
    if (point_rank(inside) != static_cast<int>(inside.size())) continue;
    const bool n0 = hyperplane_n0_condition(inside, outside);
    if (!n0 && first_independent) continue;
    const Subspace hyperplane = null_space(Gf2Matrix(r, {normal}));
    std::vector<Mask> lifted;
    for (Mask row : hyperplane.basis()) lifted.push_back(sc.span.lift(row));
    FlatRestriction flat{Subspace::span(x.dim(), lifted), inside};
    if (n0) return {Crit2Kind::kN0, std::move(flat)};
    first_independent = std::move(flat);
  }
  if (first_independent) return {Crit2Kind::kN14, std::move(first_independent)};
  return {Crit2Kind::kN12, std::nullopt};
}

Report richcase_check(const PointSet& x, const CostLimits& limits) {
  Report report;
  report.check = "richcase";
  const int c = critical_number(x, limits);
  const int r = point_rank(x.points());
  const int t = r - c + 1;
  report.params = {{"n", x.dim()}, {"size", x.size()}, {"chi", c}, {"rank", r},
                   {"t", t}};
  const int m = static_cast<int>(x.size());
  std::uint64_t checked = 0;
  if (t >= 1 && t <= m) {
    limits.require(binomial(m, t), "independent subset enumeration", t);
    const std::span<const Mask> pts = x.points();
    std::vector<int> idx(static_cast<std::size_t>(t));
    for (int i = 0; i < t; ++i) idx[i] = i;
    while (true) {
      std::vector<Mask> subset;
      for (int i : idx) subset.push_back(pts[i]);
      if (point_rank(subset) == t) {
        ++checked;
        const int chi_rest = critical_number(x.without(subset), limits);
        if (chi_rest != c) {
          Json members = Json::array();
          for (Mask p : subset) members.push_back(to_bit_string(p, x.dim()));
          report.verdict = Verdict::kFail;
          report.witness = {{"independent_set", members}, {"chi", chi_rest}};
          break;
        }
      }
      int i = t - 1;
      while (i >= 0 && idx[i] == m - t + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < t; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  report.details = {{"independent_sets_checked", checked}};
  return report;
}

PointSet cycle_matroid(std::span<const std::pair<int, int>> edges, int nvertices) {
  check_dim(nvertices);
  std::vector<Mask> points;
  for (const auto& [u, v] : edges) {
    require(u >= 0 && u < nvertices && v >= 0 && v < nvertices,
            ErrorCode::kInvalidArgument,
            "edge (" + std::to_string(u) + ", " + std::to_string(v) +
                ") has a vertex outside [0, " + std::to_string(nvertices) + ")");
    if (u == v) {
      throw Error(ErrorCode::kLoopEdge, "loop at vertex " + std::to_string(u));
    }
    points.push_back(coordinate_bit(nvertices, u + 1) |
                     coordinate_bit(nvertices, v + 1));
  }
  return PointSet(nvertices, std::move(points));
}

}  // namespace gf2crit
