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

#include "gf2crit/regularity.h"

#include <string>

#include "gf2crit/spectrum.h"

namespace gf2crit {
namespace {

void require_eps(const Rational& eps) {
  if (!(eps > 0 && eps < Rational(1, 2))) {
    throw Error(ErrorCode::kInvalidArgument,
                "eps must satisfy 0 < eps < 1/2, got " + to_string(eps));
  }
}

// Slices of every coset in one pass, indexed by coset_index.
std::vector<std::vector<Mask>> all_slices(const VectorSet& x, const Subspace& h) {
  require(x.dim() == h.ambient_dim(), ErrorCode::kDimensionMismatch,
          "set and subspace dimensions differ");
  std::vector<std::vector<Mask>> slices(std::size_t{1} << h.codim());
  for (Mask p : x.elements()) {
    // reduce(p) vanishes on the pivots, so this is coordinates(p + reduce(p)).
    slices[h.coset_index(p)].push_back(h.coordinates(p));
  }
  return slices;
}

Rational energy_of(const std::vector<std::vector<Mask>>& slices, const Subspace& h) {
  BigInt squares = 0;
  for (const auto& s : slices) squares += BigInt(s.size()) * s.size();
  // sum (|s| / |H|)^2 / 2^codim
  return Rational(squares, (BigInt(1) << (2 * h.dim())) << h.codim());
}

}  // namespace

VectorSet coset_slice(const VectorSet& x, const Subspace& h, const Gf2Vector& v) {
  require(x.dim() == h.ambient_dim() && v.dim() == h.ambient_dim(),
          ErrorCode::kDimensionMismatch, "coset_slice dimensions differ");
  const Mask target = h.reduce(v.bits());
  std::vector<Mask> out;
  for (Mask p : x.elements()) {
    if (h.reduce(p) == target) out.push_back(h.coordinates(p ^ v.bits()));
  }
  return VectorSet(h.dim(), std::move(out));
}

CosetProfile coset_profile(const VectorSet& x, const Subspace& h) {
  CosetProfile profile{h, {}};
  auto slices = all_slices(x, h);
  profile.cosets.reserve(slices.size());
  const BigInt h_size = BigInt(1) << h.dim();
  for (std::size_t j = 0; j < slices.size(); ++j) {
    VectorSet slice(h.dim(), std::move(slices[j]));
    Rational dens(BigInt(slice.size()), h_size);
    Rational defect = uniformity_defect(slice);
    profile.cosets.push_back({h.coset_representative(static_cast<std::uint32_t>(j)),
                              std::move(slice), dens, defect});
  }
  return profile;
}

Rational energy(const VectorSet& x, const Subspace& h) {
  return energy_of(all_slices(x, h), h);
}

RegularityCertificate is_regular(const VectorSet& x, const Subspace& h,
                                 const Rational& eps) {
  require_eps(eps);
  RegularityCertificate cert{h, eps, {}, 0, false};
  const auto slices = all_slices(x, h);
  for (std::size_t j = 0; j < slices.size(); ++j) {
    if (uniformity_defect(VectorSet(h.dim(), slices[j])) > eps) {
      cert.bad_cosets.push_back(h.coset_representative(static_cast<std::uint32_t>(j)));
    }
  }
  cert.bad_mass = BigInt(cert.bad_cosets.size()) << h.dim();
  cert.regular = Rational(cert.bad_mass) <= eps * Rational(BigInt(1) << x.dim());
  return cert;
}

MaxCodimExceeded::MaxCodimExceeded(int max_codim, std::vector<RefinementStep> trace)
    : Error(ErrorCode::kMaxCodimExceeded,
            "no regular subspace within codimension " + std::to_string(max_codim) +
                " after " + std::to_string(trace.size()) + " refinements"),
      trace_(std::move(trace)) {}

RegularityResult find_regular_subspace(const VectorSet& x, const Rational& eps,
                                       int max_codim) {
  require_eps(eps);
  require(max_codim >= 0, ErrorCode::kInvalidArgument,
          "max_codim must be nonnegative");
  Subspace h = Subspace::full(x.dim());
  std::vector<RefinementStep> trace;
  while (true) {
    RegularityCertificate cert = is_regular(x, h, eps);
    if (cert.regular) return {h, std::move(cert), std::move(trace)};
    if (h.codim() >= max_codim) throw MaxCodimExceeded(max_codim, std::move(trace));

    const auto slices = all_slices(x, h);
    Rational worst = -1;
    std::size_t worst_index = 0;
    for (std::size_t j = 0; j < slices.size(); ++j) {
      const Rational d = uniformity_defect(VectorSet(h.dim(), slices[j]));
      if (d > worst) {
        worst = d;
        worst_index = j;
      }
    }
    const Spectrum s = compute_spectrum(VectorSet(h.dim(), slices[worst_index]));
    const Mask u = s.argmax_nontrivial();
    // <coordinates(y), u> = <y, deposit(u, pivots)> for y in H.
    const Mask lifted = deposit_bits(u, h.pivot_mask());
    const Rational before = energy_of(slices, h);
    Subspace refined = h.intersect_hyperplane(lifted);
    const Rational after = energy(x, refined);
    trace.push_back({h.coset_representative(static_cast<std::uint32_t>(worst_index)),
                     lifted, worst, before, after, refined.codim()});
    h = std::move(refined);
  }
}

}  // namespace gf2crit
