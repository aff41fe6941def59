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

#include "cubevol/rational.hpp"

namespace cubevol {

/// Which unit cube a query lives on: [0,1]^n or [-1/2,1/2]^n.
enum class Cube { Unit, Centered };

/// Validated hyperplane normal with every component nonzero, plus the norm
/// and sign data every formula keeps asking for.
class WeightVector {
  public:
    explicit WeightVector(std::vector<Rational> components);

    int dimension() const { return static_cast<int>(components_.size()); }
    const std::vector<Rational>& components() const { return components_; }
    const Rational& component(int i) const { return components_[static_cast<std::size_t>(i)]; }

    /// Indices i with w_i < 0, as a bit mask.
    std::uint64_t negative_mask() const { return negative_mask_; }
    std::vector<int> negative_set() const;

    const Rational& l1() const { return l1_; }
    const Rational& l2_squared() const { return l2sq_; }
    const Rational& linf() const { return linf_; }
    const Rational& product() const { return product_; }
    /// Sum of all components, w . 1_[n].
    const Rational& total() const { return total_; }
    /// Sum of the negative components, w . 1_{N_w} (the minimum of w.x on the unit cube).
    const Rational& negative_sum() const { return negative_sum_; }
    /// Sum of the positive components (the maximum of w.x on the unit cube).
    Rational positive_sum() const { return total_ - negative_sum_; }

    /// Component magnitudes |w_i| (the reflected, all-positive weights).
    std::vector<Rational> absolute_components() const;

    bool all_positive() const { return negative_mask_ == 0; }

  private:
    std::vector<Rational> components_;
    std::uint64_t negative_mask_ = 0;
    Rational l1_, l2sq_, linf_, product_, total_, negative_sum_;
};

/// Indices dropped by normalize_weights, enough to reinterpret results in
/// the original dimension (slice and section volumes are unchanged).
struct ReductionRecord {
    int original_dimension = 0;
    std::vector<int> dropped_indices;
};

/// Removes zero components; throws degenerate_weights_error when nothing
/// survives.
std::pair<WeightVector, ReductionRecord> normalize_weights(std::span<const Rational> raw);

struct SliceQuery {
    WeightVector weights;
    Rational level;
    Cube cube = Cube::Unit;
};

struct SlabQuery {
    WeightVector weights;
    Rational thickness;  // must be positive
};

struct SectionQuery {
    WeightVector weights;
    Rational level;
    Cube cube = Cube::Unit;
};

/// Equivalent unit-cube slice query with all-positive weights: w' = |w|,
/// z' = z - w . 1_{N_w} (change of variables x' = A_w x + 1_{N_w}).
SliceQuery reflect_to_positive(const SliceQuery& query);

enum class VolumeScale { Unit, L2Norm };

// Exact volume: magnitude r with a scale tag. Unit-scale values are plain
// rationals; section volumes are r * ||w||_2, so the norm factor stays
// symbolic and only the float shadow takes a square root.
class VolumeValue {
  public:
    static VolumeValue unit(Rational magnitude);
    static VolumeValue l2(Rational magnitude, const Rational& l2_squared);

    const Rational& magnitude() const { return magnitude_; }
    VolumeScale scale() const { return scale_; }
    double float_value() const { return float_value_; }

  private:
    Rational magnitude_;
    VolumeScale scale_ = VolumeScale::Unit;
    double float_value_ = 0.0;
};

}  // namespace cubevol
