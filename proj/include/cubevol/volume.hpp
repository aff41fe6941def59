// Copyright 2026 The cubevol Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "cubevol/weights.hpp"

namespace cubevol {

// Volumes of halfspace slices, central slabs, and hyperplane sections of
// the unit cube, all evaluated exactly in rational arithmetic. Each value
// is an alternating sum of truncated powers of subset (or sign-vector)
// levels; the alternating sums cancel catastrophically in floating point,
// so the kernels run on denominator-cleared big integers and a float
// shadow is derived at the very end.

/// vol_n({w.x <= z} intersected with the chosen cube). Exact; clamps to 0
/// below w.1_{N_w} and to 1 above w.1_{[n] \ N_w} without enumeration.
VolumeValue slice_volume(const SliceQuery& query);

/// vol_n({z1 <= w.x <= z2} intersected with the cube); requires z1 <= z2.
VolumeValue slab_between(const WeightVector& weights, const Rational& z1, const Rational& z2,
                         Cube cube = Cube::Unit);

enum class SlabVariant { Polya, AltA, AltB };

/// vol_n({|w.x| <= theta/2} intersected with the centered cube). The three
/// variants are distinct closed forms that must agree exactly: Polya sums
/// over all of {-1,+1}^(n+1) with v = (w, theta); AltA halves the sum by
/// fixing the last sign negative; AltB uses v' = (theta, w) and a leading
/// theta/w_n term, after permuting the largest |w_i| to the last slot and
/// negating the vector if that entry is negative.
VolumeValue slab_volume_centered(const SlabQuery& query, SlabVariant variant = SlabVariant::Polya);

/// vol_{n-1}(hyperplane {w.x = z} intersected with the cube), carried as a
/// rational magnitude times ||w||_2. Levels that miss the cube return 0.
VolumeValue section_volume(const SectionQuery& query);

enum class CentralSectionVariant { Full, Reduced };

/// vol_{n-1} of the central section {w.x = 0} of the centered cube. When
/// ||w||_inf >= ||w||_1 / 2 the section is a parallelotope and the
/// magnitude is exactly 1/||w||_inf (no enumeration). The Reduced variant
/// halves the sign-vector sum by fixing the last sign negative.
VolumeValue central_section_volume(const WeightVector& weights,
                                   CentralSectionVariant variant = CentralSectionVariant::Reduced);

/// Volume of the slab {k <= sum x_i <= k+1} of the unit cube; equals
/// eulerian(n, k) / n! exactly. Requires 0 <= k < n.
Rational eulerian_slab_volume(int n, int k);

/// Alternating subset-power sum minus its closed form: zero for every
/// rational (w, lambda) whenever p <= n. Zero components are allowed.
/// For p > n no closed form is claimed and the raw sum is returned.
Rational identity_residual(std::span<const Rational> weights, const Rational& lambda, unsigned p);

/// Approximate slice volume on the compensated floating-point path: terms
/// are accumulated in ascending-magnitude order with Neumaier summation.
/// Supports n up to 26; results are honest doubles, not exact values.
double slice_volume_approx(const SliceQuery& query);

/// All-ones weight vector, the normal of the Eulerian slabs.
WeightVector ones_weights(int n);

namespace detail {

// The two enumeration kernels, exposed with [begin, end) step ranges so
// mask space can be partitioned across workers; exact partial sums add up
// to the full sum independent of the partition.

/// sum over subsets K (Gray steps begin..end) of (-1)^|K| (level - values.1_K)_+^power.
Integer signed_subset_power_sum(std::span<const Integer> values, const Integer& level,
                                unsigned power, std::uint64_t begin, std::uint64_t end);

/// Same sum without truncation: (-1)^|K| (level + values.1_K)^power.
Integer signed_subset_plain_power_sum(std::span<const Integer> values, const Integer& level,
                                      unsigned power, std::uint64_t begin, std::uint64_t end);

/// sum over sign vectors s of eps_s (values.s)_+^power; with last_negative
/// only vectors whose last sign is -1 are visited (begin/end index the
/// 2^(m-1) free steps in that case).
Integer signed_sign_power_sum(std::span<const Integer> values, unsigned power, bool last_negative,
                              std::uint64_t begin, std::uint64_t end);

/// Components permuted so the largest |w_i| sits last, then negated if that
/// entry is negative. Slab and central-section volumes are invariant.
std::vector<Rational> permute_max_last(const WeightVector& weights);

}  // namespace detail

}  // namespace cubevol
