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

#include <bit>
#include <cstdint>
#include <span>
#include <vector>

#include "cubevol/config.hpp"
#include "cubevol/errors.hpp"
#include "cubevol/rational.hpp"

namespace cubevol {

// Gray-code walk over all subsets of [n]. Consecutive masks differ in one
// bit, so the subset sum of a bound value vector is maintained with a single
// add or subtract per step instead of a fresh O(n) dot product.
//
//   for (SubsetCursor c(n, weights); ; ) {
//       use(c.mask(), c.running_sum());
//       if (!c.advance()) break;
//   }
template <typename Scalar>
class GraySubsets {
  public:
    explicit GraySubsets(int dimension) : GraySubsets(dimension, {}) {}

    GraySubsets(int dimension, std::span<const Scalar> values) : dimension_(dimension) {
        if (dimension < 1) throw invalid_parameter_error("subset enumeration needs n >= 1");
        check_dimension_cap(dimension);
        values_.assign(values.begin(), values.end());
        if (!values_.empty() && static_cast<int>(values_.size()) != dimension)
            throw invalid_parameter_error("value vector length does not match dimension");
        count_ = std::uint64_t{1} << dimension;
    }

    int dimension() const { return dimension_; }
    std::uint64_t mask() const { return mask_; }
    std::uint64_t size() const { return count_; }
    /// Index of the element toggled by the last advance (-1 on the first state).
    int flipped() const { return flipped_; }
    bool sign_negative() const { return (std::popcount(mask_) & 1) != 0; }
    /// Sum of bound values over the current subset.
    const Scalar& running_sum() const { return running_sum_; }

    bool advance() {
        if (++step_ >= count_) return false;
        flipped_ = std::countr_zero(step_);
        std::uint64_t bit = std::uint64_t{1} << flipped_;
        mask_ ^= bit;
        if (!values_.empty()) {
            if (mask_ & bit)
                running_sum_ += values_[static_cast<std::size_t>(flipped_)];
            else
                running_sum_ -= values_[static_cast<std::size_t>(flipped_)];
        }
        return true;
    }

  private:
    int dimension_;
    std::vector<Scalar> values_;
    std::uint64_t mask_ = 0;
    std::uint64_t step_ = 0;
    std::uint64_t count_ = 0;
    int flipped_ = -1;
    Scalar running_sum_{};
};

using SubsetCursor = GraySubsets<Rational>;

inline SubsetCursor enumerate_subsets(int n) { return SubsetCursor(n); }
inline SubsetCursor enumerate_subsets(int n, std::span<const Rational> weights) {
    return SubsetCursor(n, weights);
}

enum class SignFilter { All, LastNegative };

/// One vertex of {-1,+1}^n together with its parity prod s_i.
struct SignVector {
    int dimension = 0;
    std::vector<int> signs;
    int parity = 1;
};

// Gray-code walk over sign vectors s in {-1,+1}^n. A bound value vector v
// keeps v.s incrementally updated (each flip moves the sum by 2*v_i). With
// SignFilter::LastNegative only the 2^(n-1) vectors with s_n = -1 are
// visited.
template <typename Scalar>
class GraySigns {
  public:
    GraySigns(int dimension, SignFilter filter) : GraySigns(dimension, filter, {}) {}

    GraySigns(int dimension, SignFilter filter, std::span<const Scalar> values)
        : dimension_(dimension), filter_(filter) {
        if (dimension < 1) throw invalid_parameter_error("sign enumeration needs n >= 1");
        check_dimension_cap(dimension);
        values_.assign(values.begin(), values.end());
        if (!values_.empty() && static_cast<int>(values_.size()) != dimension)
            throw invalid_parameter_error("value vector length does not match dimension");
        free_bits_ = (filter == SignFilter::LastNegative) ? dimension - 1 : dimension;
        count_ = std::uint64_t{1} << free_bits_;
        if (!values_.empty()) {
            for (const Scalar& v : values_) running_sum_ += v;
            if (filter == SignFilter::LastNegative)
                running_sum_ -= 2 * values_.back();
        }
        if (filter == SignFilter::LastNegative) parity_ = -1;
    }

    int dimension() const { return dimension_; }
    std::uint64_t size() const { return count_; }
    int parity() const { return parity_; }
    const Scalar& running_sum() const { return running_sum_; }

    int sign(int i) const {
        if (filter_ == SignFilter::LastNegative && i == dimension_ - 1) return -1;
        return (neg_mask_ >> i) & 1 ? -1 : 1;
    }

    SignVector current() const {
        SignVector s;
        s.dimension = dimension_;
        s.signs.resize(dimension_);
        for (int i = 0; i < dimension_; ++i) s.signs[i] = sign(i);
        s.parity = parity_;
        return s;
    }

    bool advance() {
        if (++step_ >= count_) return false;
        int flipped = std::countr_zero(step_);
        std::uint64_t bit = std::uint64_t{1} << flipped;
        neg_mask_ ^= bit;
        parity_ = -parity_;
        if (!values_.empty()) {
            const Scalar& v = values_[static_cast<std::size_t>(flipped)];
            if (neg_mask_ & bit)
                running_sum_ -= 2 * v;
            else
                running_sum_ += 2 * v;
        }
        return true;
    }

  private:
    int dimension_;
    SignFilter filter_;
    std::vector<Scalar> values_;
    std::uint64_t neg_mask_ = 0;
    std::uint64_t step_ = 0;
    std::uint64_t count_ = 0;
    int free_bits_ = 0;
    int parity_ = 1;
    Scalar running_sum_{};
};

std::vector<SignVector> enumerate_sign_vectors(int n, SignFilter filter = SignFilter::All);

/// Triangle of Eulerian numbers A(n,k), grown on demand with the standard
/// recurrence A(n,k) = (k+1) A(n-1,k) + (n-k) A(n-1,k-1).
class EulerianTable {
  public:
    EulerianTable() = default;

    void ensure_rows(int max_n);
    int max_n() const { return static_cast<int>(rows_.size()) - 1; }
    /// A(n,k); zero outside 0 <= k < n (with A(0,0) = 1).
    Integer value(int n, int k) const;

  private:
    std::vector<std::vector<Integer>> rows_;  // rows_[n][k], k in [0, max(n-1,0)]
};

Integer eulerian(int n, int k);
Integer binomial(unsigned long n, unsigned long k);
Integer factorial(unsigned long n);

}  // namespace cubevol
