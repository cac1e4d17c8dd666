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

#ifndef GF2CRIT_TESTS_ORACLES_H_
#define GF2CRIT_TESTS_ORACLES_H_

// Slow reference implementations used to cross-check the library. They share
// only the Mask type with the code under test and are deliberately naive.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "gf2crit/gf2.h"

namespace oracle {

using gf2crit::Mask;

inline bool ip(Mask a, Mask b) { return (std::popcount(a & b) & 1) != 0; }

// All elements of the span, sorted, by repeated closure under addition.
inline std::vector<Mask> closure(const std::vector<Mask>& gens) {
  std::set<Mask> elems{0};
  for (Mask g : gens) {
    std::vector<Mask> shifted;
    for (Mask e : elems) shifted.push_back(e ^ g);
    elems.insert(shifted.begin(), shifted.end());
  }
  return {elems.begin(), elems.end()};
}

inline int rank(const std::vector<Mask>& gens) {
  return std::bit_width(closure(gens).size()) - 1;
}

// Every d-dimensional subspace of GF(2)^n, each given by its sorted element
// list, found by growing spans one vector at a time.
inline std::set<std::vector<Mask>> grow_subspaces(int n, int d) {
  std::set<std::vector<Mask>> level{{0}};
  for (int k = 0; k < d; ++k) {
    std::set<std::vector<Mask>> next;
    for (const auto& s : level) {
      for (Mask v = 1; v < (Mask{1} << n); ++v) {
        if (std::binary_search(s.begin(), s.end(), v)) continue;
        std::vector<Mask> gens(s.begin(), s.end());
        gens.push_back(v);
        next.insert(closure(gens));
      }
    }
    level = std::move(next);
  }
  return level;
}

// Memoized; n <= 6.
inline const std::set<std::vector<Mask>>& all_subspaces(int n, int d) {
  static std::map<std::pair<int, int>, std::set<std::vector<Mask>>> cache;
  auto it = cache.find({n, d});
  if (it == cache.end()) it = cache.emplace(std::make_pair(n, d), grow_subspaces(n, d)).first;
  return it->second;
}

// Smallest c admitting a linear map A: GF(2)^n -> GF(2)^c with A x != 0 for
// every point, by trying every c x n matrix. Gives up above max_c and returns
// max_c + 1.
inline int chi_by_matrices(const std::vector<Mask>& pts, int n, int max_c = 32) {
  if (pts.empty()) return 0;
  for (int c = 1; c <= std::min(n, max_c); ++c) {
    const std::uint64_t total = std::uint64_t{1} << (c * n);
    for (std::uint64_t code = 0; code < total; ++code) {
      std::vector<Mask> rows(c);
      for (int i = 0; i < c; ++i) {
        rows[i] = static_cast<Mask>((code >> (i * n)) & ((std::uint64_t{1} << n) - 1));
      }
      bool ok = true;
      for (Mask p : pts) {
        bool nonzero = false;
        for (Mask r : rows) nonzero = nonzero || ip(r, p);
        if (!nonzero) {
          ok = false;
          break;
        }
      }
      if (ok) return c;
    }
  }
  return std::min(n, max_c + 1);
}

// Smallest codimension of a subspace missing every point, by full subspace
// enumeration (n <= 6).
inline int chi_by_subspaces(const std::vector<Mask>& pts, int n) {
  for (int d = n; d >= 0; --d) {
    for (const auto& s : all_subspaces(n, d)) {
      bool hit = false;
      for (Mask p : pts) hit = hit || std::binary_search(s.begin(), s.end(), p);
      if (!hit) return n - d;
    }
  }
  return n;
}

inline std::uint64_t triangles(const std::vector<Mask>& pts) {
  std::uint64_t count = 0;
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j)
      for (std::size_t k = j + 1; k < pts.size(); ++k)
        if ((pts[i] ^ pts[j] ^ pts[k]) == 0) ++count;
  return count;
}

// max over hyperplanes H_u of | |H_u ∩ X| - |X \ H_u| |, as a numerator over
// 2^n.
inline std::int64_t max_hyperplane_discrepancy(const std::vector<Mask>& xs, int n) {
  std::int64_t best = 0;
  for (Mask u = 1; u < (Mask{1} << n); ++u) {
    std::int64_t inside = 0;
    std::int64_t outside = 0;
    for (Mask x : xs) (ip(x, u) ? outside : inside) += 1;
    best = std::max(best, inside > outside ? inside - outside : outside - inside);
  }
  return best;
}

// Minimum distance of the code with the points as parity-check columns: for
// each point p, BFS over syndromes using the other points finds the fewest
// of them summing to p.
inline std::optional<int> girth_bfs(const std::vector<Mask>& pts, int n) {
  std::optional<int> best;
  const std::size_t space = std::size_t{1} << n;
  for (std::size_t skip = 0; skip < pts.size(); ++skip) {
    std::vector<int> dist(space, -1);
    std::deque<Mask> queue{0};
    dist[0] = 0;
    while (!queue.empty()) {
      const Mask s = queue.front();
      queue.pop_front();
      for (std::size_t i = 0; i < pts.size(); ++i) {
        if (i == skip) continue;
        const Mask t = s ^ pts[i];
        if (dist[t] < 0) {
          dist[t] = dist[s] + 1;
          queue.push_back(t);
        }
      }
    }
    const int d = dist[pts[skip]];
    if (d > 0 && (!best || d + 1 < *best)) best = d + 1;
  }
  return best;
}

// Smallest odd zero-sum subset by enumerating all subsets (|pts| <= 20).
inline std::optional<int> min_odd_circuit(const std::vector<Mask>& pts) {
  std::optional<int> best;
  const std::uint64_t total = std::uint64_t{1} << pts.size();
  for (std::uint64_t sub = 1; sub < total; ++sub) {
    const int size = std::popcount(sub);
    if ((size & 1) == 0 || (best && size >= *best)) continue;
    Mask sum = 0;
    for (std::size_t i = 0; i < pts.size(); ++i)
      if ((sub >> i) & 1) sum ^= pts[i];
    if (sum == 0) best = size;
  }
  return best;
}

// Chromatic number by backtracking over colour counts.
inline int chromatic_number(int nv, const std::vector<std::pair<int, int>>& edges) {
  if (nv == 0) return 0;
  std::vector<std::vector<bool>> adj(nv, std::vector<bool>(nv, false));
  for (auto [u, v] : edges) adj[u][v] = adj[v][u] = true;
  for (int k = 1; k <= nv; ++k) {
    std::vector<int> colour(nv, -1);
    auto place = [&](auto&& self, int v) -> bool {
      if (v == nv) return true;
      for (int col = 0; col < k; ++col) {
        bool clash = false;
        for (int w = 0; w < v; ++w) clash = clash || (adj[v][w] && colour[w] == col);
        if (clash) continue;
        colour[v] = col;
        if (self(self, v + 1)) return true;
      }
      colour[v] = -1;
      return false;
    };
    if (place(place, 0)) return k;
  }
  return nv;
}

inline int ceil_log2(int x) {
  int c = 0;
  while ((1 << c) < x) ++c;
  return c;
}

// Independence and odd-circuit condition on S checked by subset enumeration.
inline bool n0_predicate(const std::vector<Mask>& pts, const std::vector<Mask>& s) {
  if (rank(s) != static_cast<int>(s.size())) return false;
  const std::uint64_t total = std::uint64_t{1} << pts.size();
  for (std::uint64_t sub = 1; sub < total; ++sub) {
    if ((std::popcount(sub) & 1) == 0) continue;
    Mask sum = 0;
    int outside = 0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      if (((sub >> i) & 1) == 0) continue;
      sum ^= pts[i];
      if (std::find(s.begin(), s.end(), pts[i]) == s.end()) ++outside;
    }
    // Only circuits count: no proper nonempty subset may sum to zero.
    if (sum != 0 || outside >= 4) continue;
    bool circuit = true;
    for (std::uint64_t part = (sub - 1) & sub; part != 0 && circuit;
         part = (part - 1) & sub) {
      Mask psum = 0;
      for (std::size_t i = 0; i < pts.size(); ++i)
        if ((part >> i) & 1) psum ^= pts[i];
      if (psum == 0) circuit = false;
    }
    if (circuit) return false;
  }
  return true;
}

enum class Crit2 { kN0, kN14, kN12 };

// Class of a critical-number-2 set from its definition: scan every hyperplane
// of span(X) (n <= 6) for an independent restriction, and for one that also
// meets the odd-circuit condition.
inline Crit2 classify(const std::vector<Mask>& pts, int n) {
  const std::vector<Mask> span = closure(pts);
  const int r = std::bit_width(span.size()) - 1;
  bool independent = false;
  for (const auto& h : all_subspaces(n, r - 1)) {
    bool inside = true;
    for (Mask e : h) inside = inside && std::binary_search(span.begin(), span.end(), e);
    if (!inside) continue;
    std::vector<Mask> s;
    for (Mask p : pts)
      if (std::binary_search(h.begin(), h.end(), p)) s.push_back(p);
    if (rank(s) != static_cast<int>(s.size())) continue;
    independent = true;
    if (n0_predicate(pts, s)) return Crit2::kN0;
  }
  return independent ? Crit2::kN14 : Crit2::kN12;
}

}  // namespace oracle

#endif  // GF2CRIT_TESTS_ORACLES_H_
