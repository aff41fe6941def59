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
#include <optional>
#include <string>
#include <vector>

#include "cubevol/weights.hpp"

namespace cubevol {

// Independent oracles for the closed-form kernels. These deliberately do
// not share arithmetic with the exact formulas: Monte Carlo and the grid
// count decide membership point by point, and the sinc quadrature
// evaluates an oscillatory integral that happens to equal a slab volume.

enum class RegionKind { Slice, Slab, CenteredSlab, SectionAdjacentSlab };

/// A level-set region of a cube: {w.x <= z}, {z1 <= w.x <= z2},
/// {|w.x| <= theta/2}, or the thin slab [z, z+h] hugging a section.
struct RegionSpec {
    RegionKind kind = RegionKind::Slice;
    WeightVector weights;
    Rational z1;  // slice/slab lower bound (slice uses z1 as its level)
    Rational z2;
    Rational thickness;  // centered slab / section-adjacent thickness
    Cube cube = Cube::Unit;

    static RegionSpec slice(WeightVector w, Rational level, Cube cube = Cube::Unit);
    static RegionSpec slab(WeightVector w, Rational z1, Rational z2, Cube cube = Cube::Unit);
    static RegionSpec centered_slab(WeightVector w, Rational theta);
    static RegionSpec section_adjacent(WeightVector w, Rational level, Rational thickness,
                                       Cube cube = Cube::Unit);

    /// Exact membership test for a rational point.
    bool contains(std::span<const Rational> point) const;
    /// Lower/upper bounds on w.x defining the region (slice: upper only).
    std::pair<std::optional<Rational>, Rational> level_bounds() const;
    /// The matching closed-form volume from the exact kernels.
    Rational exact_volume() const;

    std::string describe() const;
};

struct McEstimate {
    double mean = 0.0;
    double stderr_value = 0.0;  // sqrt(mean (1-mean) / samples)
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
};

/// Indicator Monte Carlo over the region's cube; deterministic per seed
/// (samples are drawn in fixed blocks so partitions reproduce the stream).
McEstimate mc_volume(const RegionSpec& region, std::uint64_t samples, std::uint64_t seed);

/// Midpoint-rule cell count on a uniform grid, n <= 4 and resolution <= 512;
/// every cell center is tested with exact integer arithmetic.
Rational grid_volume(const RegionSpec& region, int resolution);

struct QuadratureConfig {
    double abs_tol = 1e-8;
    double truncation = 0.0;  // 0 = auto from the certified tail bound
    std::uint64_t max_panels = 50'000'000;
};

/// Numerically evaluates (2/pi) Int_0^inf (sin(theta x)/x) prod sin(w_i x)/(w_i x) dx,
/// which equals the centered-slab volume. Panels sit on subdivisions of the
/// leading factor's zeros k pi/theta; the truncation point comes from the
/// closed-form tail bound 1/(n T^n prod w_i) <= abs_tol/2.
double sinc_slab_integral(const WeightVector& weights, const Rational& theta,
                          const QuadratureConfig& config = {});

struct BorweinRow {
    std::vector<int> primes;
    Rational exact;
    double quadrature = 0.0;
    double tol = 0.0;  // certified quadrature tolerance for this row
    double discrepancy = 0.0;
    bool covers_cube = false;   // exact == 1
    bool first_deficit = false; // first prefix whose volume drops below 1
};

/// For each prefix of the odd primes up to max_prime: the exact volume of
/// the slab {|sum x_i/p_i| <= 1/2} of the centered cube next to its sinc
/// quadrature value. The volume stays exactly 1 until the reciprocal sum
/// passes 1 (first at p = 29). Short prefixes have slowly decaying tails,
/// so each row is run at the tightest tolerance the certified truncation
/// bound can reach within the panel budget (recorded in `tol`, never looser
/// than needed: length-3 prefixes onward reach config.abs_tol).
std::vector<BorweinRow> borwein_report(int max_prime, const QuadratureConfig& config = {
                                                          .abs_tol = 1e-12});

}  // namespace cubevol
