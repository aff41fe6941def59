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

#include "cubevol/weights.hpp"

#include <cmath>

#include "cubevol/config.hpp"
#include "cubevol/errors.hpp"

namespace cubevol {

WeightVector::WeightVector(std::vector<Rational> components)
    : components_(std::move(components)) {
    if (components_.empty()) throw degenerate_weights_error();
    if (static_cast<int>(components_.size()) > kMaxDimensionCap)
        throw invalid_parameter_error("weight vector longer than the hard dimension limit");
    l1_ = 0;
    l2sq_ = 0;
    linf_ = 0;
    product_ = 1;
    total_ = 0;
    negative_sum_ = 0;
    for (std::size_t i = 0; i < components_.size(); ++i) {
        // Inputs may arrive unreduced (mpq_class(p, q) does not normalize).
        components_[i] = canonical(components_[i]);
        const Rational& w = components_[i];
        if (w == 0) throw degenerate_weights_error();
        Rational a = abs(w);
        l1_ += a;
        l2sq_ += w * w;
        if (a > linf_) linf_ = a;
        product_ *= w;
        total_ += w;
        if (w < 0) {
            negative_mask_ |= std::uint64_t{1} << i;
            negative_sum_ += w;
        }
    }
}

std::vector<int> WeightVector::negative_set() const {
    std::vector<int> out;
    for (int i = 0; i < dimension(); ++i)
        if (negative_mask_ >> i & 1) out.push_back(i);
    return out;
}

std::vector<Rational> WeightVector::absolute_components() const {
    std::vector<Rational> out;
    out.reserve(components_.size());
    for (const Rational& w : components_) out.push_back(abs(w));
    return out;
}

std::pair<WeightVector, ReductionRecord> normalize_weights(std::span<const Rational> raw) {
    if (raw.empty()) throw degenerate_weights_error();
    ReductionRecord record;
    record.original_dimension = static_cast<int>(raw.size());
    std::vector<Rational> kept;
    kept.reserve(raw.size());
    for (int i = 0; i < static_cast<int>(raw.size()); ++i) {
        if (raw[static_cast<std::size_t>(i)] == 0)
            record.dropped_indices.push_back(i);
        else
            kept.push_back(raw[static_cast<std::size_t>(i)]);
    }
    if (kept.empty()) throw degenerate_weights_error();
    return {WeightVector(std::move(kept)), std::move(record)};
}

SliceQuery reflect_to_positive(const SliceQuery& query) {
    if (query.cube != Cube::Unit)
        throw invalid_parameter_error("reflection is defined on the unit cube");
    if (query.weights.all_positive()) return query;
    Rational shifted = query.level - query.weights.negative_sum();
    return SliceQuery{WeightVector(query.weights.absolute_components()), shifted, Cube::Unit};
}

VolumeValue VolumeValue::unit(Rational magnitude) {
    VolumeValue v;
    v.magnitude_ = std::move(magnitude);
    v.scale_ = VolumeScale::Unit;
    v.float_value_ = to_double(v.magnitude_);
    return v;
}

VolumeValue VolumeValue::l2(Rational magnitude, const Rational& l2_squared) {
    VolumeValue v;
    v.magnitude_ = std::move(magnitude);
    v.scale_ = VolumeScale::L2Norm;
    v.float_value_ = to_double(v.magnitude_) * std::sqrt(to_double(l2_squared));
    return v;
}

}  // namespace cubevol
