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

#include "cubevol/volume.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "cubevol/combinatorics.hpp"
#include "cubevol/config.hpp"
#include "cubevol/errors.hpp"

namespace cubevol {

namespace detail {

Integer signed_subset_power_sum(std::span<const Integer> values, const Integer& level,
                                unsigned power, std::uint64_t begin, std::uint64_t end) {
    Integer acc(0);
    if (begin >= end) return acc;
    const int n = static_cast<int>(values.size());
    std::uint64_t mask = begin ^ (begin >> 1);
    Integer running(0), diff, term;
    for (int i = 0; i < n; ++i)
        if (mask >> i & 1) running += values[static_cast<std::size_t>(i)];
    bool negative = (std::popcount(mask) & 1) != 0;
    for (std::uint64_t k = begin;; ++k) {
        mpz_sub(diff.get_mpz_t(), level.get_mpz_t(), running.get_mpz_t());
        if (mpz_sgn(diff.get_mpz_t()) > 0) {
            mpz_pow_ui(term.get_mpz_t(), diff.get_mpz_t(), power);
            if (negative)
                mpz_sub(acc.get_mpz_t(), acc.get_mpz_t(), term.get_mpz_t());
            else
                mpz_add(acc.get_mpz_t(), acc.get_mpz_t(), term.get_mpz_t());
        }
        if (k + 1 == end) break;
        int flipped = std::countr_zero(k + 1);
        std::uint64_t bit = std::uint64_t{1} << flipped;
        mask ^= bit;
        negative = !negative;
        const Integer& v = values[static_cast<std::size_t>(flipped)];
        if (mask & bit)
            mpz_add(running.get_mpz_t(), running.get_mpz_t(), v.get_mpz_t());
        else
            mpz_sub(running.get_mpz_t(), running.get_mpz_t(), v.get_mpz_t());
    }
    return acc;
}

Integer signed_subset_plain_power_sum(std::span<const Integer> values, const Integer& level,
                                      unsigned power, std::uint64_t begin, std::uint64_t end) {
    Integer acc(0);
    if (begin >= end) return acc;
    const int n = static_cast<int>(values.size());
    std::uint64_t mask = begin ^ (begin >> 1);
    Integer running(0), base, term;
    for (int i = 0; i < n; ++i)
        if (mask >> i & 1) running += values[static_cast<std::size_t>(i)];
    bool negative = (std::popcount(mask) & 1) != 0;
    for (std::uint64_t k = begin;; ++k) {
        mpz_add(base.get_mpz_t(), level.get_mpz_t(), running.get_mpz_t());
        mpz_pow_ui(term.get_mpz_t(), base.get_mpz_t(), power);
        if (negative)
            mpz_sub(acc.get_mpz_t(), acc.get_mpz_t(), term.get_mpz_t());
        else
            mpz_add(acc.get_mpz_t(), acc.get_mpz_t(), term.get_mpz_t());
        if (k + 1 == end) break;
        int flipped = std::countr_zero(k + 1);
        std::uint64_t bit = std::uint64_t{1} << flipped;
        mask ^= bit;
        negative = !negative;
        const Integer& v = values[static_cast<std::size_t>(flipped)];
        if (mask & bit)
            mpz_add(running.get_mpz_t(), running.get_mpz_t(), v.get_mpz_t());
        else
            mpz_sub(running.get_mpz_t(), running.get_mpz_t(), v.get_mpz_t());
    }
    return acc;
}

Integer signed_sign_power_sum(std::span<const Integer> values, unsigned power, bool last_negative,
                              std::uint64_t begin, std::uint64_t end) {
    Integer acc(0);
    if (begin >= end) return acc;
    const int m = static_cast<int>(values.size());
    const int free_bits = last_negative ? m - 1 : m;
    // neg_mask bit set <=> sign -1 for that slot.
    std::uint64_t neg_mask = begin ^ (begin >> 1);
    Integer running(0), term;
    for (int i = 0; i < m; ++i) running += values[static_cast<std::size_t>(i)];
    for (int i = 0; i < free_bits; ++i)
        if (neg_mask >> i & 1) running -= 2 * values[static_cast<std::size_t>(i)];
    bool negative = (std::popcount(neg_mask) & 1) != 0;
    if (last_negative) {
        running -= 2 * values[static_cast<std::size_t>(m - 1)];
        negative = !negative;
    }
    for (std::uint64_t k = begin;; ++k) {
        if (mpz_sgn(running.get_mpz_t()) > 0) {
            mpz_pow_ui(term.get_mpz_t(), running.get_mpz_t(), power);
            if (negative)
                mpz_sub(acc.get_mpz_t(), acc.get_mpz_t(), term.get_mpz_t());
            else
                mpz_add(acc.get_mpz_t(), acc.get_mpz_t(), term.get_mpz_t());
        }
        if (k + 1 == end) break;
        int flipped = std::countr_zero(k + 1);
        std::uint64_t bit = std::uint64_t{1} << flipped;
        neg_mask ^= bit;
        negative = !negative;
        Integer twice = 2 * values[static_cast<std::size_t>(flipped)];
        if (neg_mask & bit)
            mpz_sub(running.get_mpz_t(), running.get_mpz_t(), twice.get_mpz_t());
        else
            mpz_add(running.get_mpz_t(), running.get_mpz_t(), twice.get_mpz_t());
    }
    return acc;
}

std::vector<Rational> permute_max_last(const WeightVector& weights) {
    std::vector<Rational> out = weights.components();
    std::size_t arg = 0;
    Rational best = abs(out[0]);
    for (std::size_t i = 1; i < out.size(); ++i) {
        Rational a = abs(out[i]);
        if (a > best) {
            best = a;
            arg = i;
        }
    }
    std::swap(out[arg], out.back());
    if (out.back() < 0)
        for (Rational& w : out) w = -w;
    return out;
}

namespace {

// Denominator-cleared slice sum on all-positive weights: the shared D^n
// cancels, leaving sum / (n! * prod U_i) exactly.
Rational positive_slice_magnitude(const WeightVector& positive, const Rational& level) {
    const int n = positive.dimension();
    check_dimension_cap(n);
    std::vector<Rational> all = positive.components();
    all.push_back(level);
    ClearedIntegers cleared = clear_denominators(all);
    std::span<const Integer> scaled(cleared.scaled);
    Integer acc = signed_subset_power_sum(scaled.first(static_cast<std::size_t>(n)),
                                          cleared.scaled.back(), static_cast<unsigned>(n), 0,
                                          std::uint64_t{1} << n);
    Integer den = factorial_integer(static_cast<unsigned long>(n));
    for (int i = 0; i < n; ++i) den *= cleared.scaled[static_cast<std::size_t>(i)];
    return make_rational(acc, den);
}

Rational unit_cube_level(const SliceQuery& query) {
    if (query.cube == Cube::Centered) return query.level + query.weights.total() / 2;
    return query.level;
}

}  // namespace
}  // namespace detail

VolumeValue slice_volume(const SliceQuery& query) {
    const WeightVector& w = query.weights;
    Rational z = detail::unit_cube_level(query);
    // Reflect to positive weights; exact clamps before any enumeration.
    Rational reflected_level = z - w.negative_sum();
    if (reflected_level <= 0) return VolumeValue::unit(Rational(0));
    if (reflected_level >= w.l1()) return VolumeValue::unit(Rational(1));
    WeightVector positive = w.all_positive() ? w : WeightVector(w.absolute_components());
    return VolumeValue::unit(detail::positive_slice_magnitude(positive, reflected_level));
}

VolumeValue slab_between(const WeightVector& weights, const Rational& z1, const Rational& z2,
                         Cube cube) {
    if (z1 > z2) throw invalid_parameter_error("slab levels out of order (z1 > z2)");
    Rational upper = slice_volume(SliceQuery{weights, z2, cube}).magnitude();
    Rational lower = slice_volume(SliceQuery{weights, z1, cube}).magnitude();
    return VolumeValue::unit(upper - lower);
}

VolumeValue slab_volume_centered(const SlabQuery& query, SlabVariant variant) {
    const WeightVector& w = query.weights;
    const Rational& theta = query.thickness;
    if (theta <= 0) throw invalid_parameter_error("slab thickness must be positive");
    const int n = w.dimension();
    // On the centered cube |w.x| <= ||w||_1 / 2 everywhere, so the slab
    // covers the whole cube as soon as theta >= ||w||_1.
    if (w.l1() <= theta) return VolumeValue::unit(Rational(1));
    check_dimension_cap(n + 1);

    Integer power_of_two = Integer(1) << (variant == SlabVariant::Polya ? n : n - 1);
    Integer nfact = factorial_integer(static_cast<unsigned long>(n));

    if (variant == SlabVariant::AltB) {
        std::vector<Rational> arranged = detail::permute_max_last(w);
        std::vector<Rational> all;
        all.reserve(arranged.size() + 1);
        all.push_back(theta);
        all.insert(all.end(), arranged.begin(), arranged.end());
        ClearedIntegers cleared = clear_denominators(all);
        Integer acc = detail::signed_sign_power_sum(cleared.scaled, static_cast<unsigned>(n),
                                                    /*last_negative=*/true, 0,
                                                    std::uint64_t{1} << n);
        Integer den = power_of_two * nfact;
        for (std::size_t i = 1; i < cleared.scaled.size(); ++i) den *= cleared.scaled[i];
        Rational lead = make_rational(cleared.scaled.front(), cleared.scaled.back());
        return VolumeValue::unit(lead + make_rational(acc, den));
    }

    std::vector<Rational> all = w.components();
    all.push_back(theta);
    ClearedIntegers cleared = clear_denominators(all);
    bool last_negative = (variant == SlabVariant::AltA);
    Integer acc = detail::signed_sign_power_sum(
        cleared.scaled, static_cast<unsigned>(n), last_negative, 0,
        std::uint64_t{1} << (last_negative ? n : n + 1));
    Integer den = power_of_two * nfact;
    for (int i = 0; i < n; ++i) den *= cleared.scaled[static_cast<std::size_t>(i)];
    Rational sum = make_rational(acc, den);
    if (variant == SlabVariant::AltA) sum += 1;
    return VolumeValue::unit(sum);
}

VolumeValue section_volume(const SectionQuery& query) {
    const WeightVector& w = query.weights;
    const int n = w.dimension();
    Rational z = query.level;
    if (query.cube == Cube::Centered) z += w.total() / 2;
    Rational reflected_level = z - w.negative_sum();
    // The hyperplane meets the cube iff the reflected level lies in
    // [0, ||w||_1]; outside that the section volume is 0, not an error.
    if (reflected_level < 0 || reflected_level > w.l1())
        return VolumeValue::l2(Rational(0), w.l2_squared());
    check_dimension_cap(n);

    std::vector<Rational> all = w.absolute_components();
    all.push_back(reflected_level);
    ClearedIntegers cleared = clear_denominators(all);
    std::span<const Integer> scaled(cleared.scaled);
    Integer acc = detail::signed_subset_power_sum(scaled.first(static_cast<std::size_t>(n)),
                                                  cleared.scaled.back(),
                                                  static_cast<unsigned>(n - 1), 0,
                                                  std::uint64_t{1} << n);
    Integer den = factorial_integer(static_cast<unsigned long>(n - 1));
    for (int i = 0; i < n; ++i) den *= cleared.scaled[static_cast<std::size_t>(i)];
    Rational magnitude = make_rational(acc * cleared.denom, den);
    return VolumeValue::l2(magnitude, w.l2_squared());
}

VolumeValue central_section_volume(const WeightVector& weights, CentralSectionVariant variant) {
    const int n = weights.dimension();
    // Parallelotope fast path: checked exactly before any enumeration.
    if (weights.linf() >= weights.l1() / 2)
        return VolumeValue::l2(1 / weights.linf(), weights.l2_squared());
    check_dimension_cap(n);

    Integer half_power = Integer(1) << (n - 1);
    Integer nfact = factorial_integer(static_cast<unsigned long>(n - 1));

    if (variant == CentralSectionVariant::Full) {
        ClearedIntegers cleared = clear_denominators(weights.components());
        Integer acc =
            detail::signed_sign_power_sum(cleared.scaled, static_cast<unsigned>(n - 1),
                                          /*last_negative=*/false, 0, std::uint64_t{1} << n);
        Integer den = half_power * nfact;
        for (const Integer& u : cleared.scaled) den *= u;
        return VolumeValue::l2(make_rational(acc * cleared.denom, den), weights.l2_squared());
    }

    std::vector<Rational> arranged = detail::permute_max_last(weights);
    ClearedIntegers cleared = clear_denominators(arranged);
    Integer acc =
        detail::signed_sign_power_sum(cleared.scaled, static_cast<unsigned>(n - 1),
                                      /*last_negative=*/true, 0, std::uint64_t{1} << (n - 1));
    Integer den = half_power * nfact;
    for (const Integer& u : cleared.scaled) den *= u;
    // The 2^(n-2) prefactor is written as 2^(n-1)/2 so n = 1 stays integral.
    Rational magnitude =
        make_rational(cleared.denom, cleared.scaled.back()) + 2 * make_rational(acc * cleared.denom, den);
    return VolumeValue::l2(magnitude, weights.l2_squared());
}

Rational eulerian_slab_volume(int n, int k) {
    if (n < 1) throw invalid_parameter_error("eulerian slab needs n >= 1");
    if (k < 0 || k >= n)
        throw invalid_parameter_error("eulerian slab needs 0 <= k < n");
    return slab_between(ones_weights(n), Rational(k), Rational(k + 1), Cube::Unit).magnitude();
}

Rational identity_residual(std::span<const Rational> weights, const Rational& lambda,
                           unsigned p) {
    const int n = static_cast<int>(weights.size());
    if (n < 1) throw invalid_parameter_error("identity needs at least one weight");
    check_dimension_cap(n);
    std::vector<Rational> all;
    all.reserve(weights.size() + 1);
    for (const Rational& w : weights) all.push_back(canonical(w));
    all.push_back(canonical(lambda));
    ClearedIntegers cleared = clear_denominators(all);
    std::span<const Integer> scaled(cleared.scaled);
    Integer acc = detail::signed_subset_plain_power_sum(scaled.first(static_cast<std::size_t>(n)),
                                                        cleared.scaled.back(), p, 0,
                                                        std::uint64_t{1} << n);
    Integer denom_power;
    mpz_pow_ui(denom_power.get_mpz_t(), cleared.denom.get_mpz_t(), p);
    Rational lhs = make_rational(acc, denom_power);
    if (p == static_cast<unsigned>(n)) {
        Rational prod(1);
        for (int i = 0; i < n; ++i) prod *= all[static_cast<std::size_t>(i)];
        Rational rhs = factorial_integer(p) * prod;
        if (n % 2 != 0) rhs = -rhs;
        return lhs - rhs;
    }
    return lhs;  // claimed right-hand side is 0 for p < n; no claim beyond
}

double slice_volume_approx(const SliceQuery& query) {
    const WeightVector& w = query.weights;
    Rational z = detail::unit_cube_level(query);
    Rational reflected_level = z - w.negative_sum();
    if (reflected_level <= 0) return 0.0;
    if (reflected_level >= w.l1()) return 1.0;
    const int n = w.dimension();
    if (n > 26)
        throw invalid_parameter_error("floating-point path materializes 2^n terms; n <= 26");

    std::vector<double> u(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        u[static_cast<std::size_t>(i)] = std::fabs(to_double(w.component(i)));
    double level = to_double(reflected_level);

    std::vector<double> terms;
    terms.reserve(std::size_t{1} << n);
    double running = 0.0;
    std::uint64_t mask = 0;
    bool negative = false;
    std::uint64_t count = std::uint64_t{1} << n;
    for (std::uint64_t k = 0;; ++k) {
        double base = level - running;
        if (base > 0.0) {
            double t = std::pow(base, n);
            terms.push_back(negative ? -t : t);
        }
        if (k + 1 == count) break;
        int flipped = std::countr_zero(k + 1);
        std::uint64_t bit = std::uint64_t{1} << flipped;
        mask ^= bit;
        negative = !negative;
        running += (mask & bit) ? u[static_cast<std::size_t>(flipped)]
                                : -u[static_cast<std::size_t>(flipped)];
    }
    std::sort(terms.begin(), terms.end(),
              [](double a, double b) { return std::fabs(a) < std::fabs(b); });
    // Neumaier compensated sum over the sorted terms.
    double sum = 0.0, compensation = 0.0;
    for (double t : terms) {
        double next = sum + t;
        if (std::fabs(sum) >= std::fabs(t))
            compensation += (sum - next) + t;
        else
            compensation += (t - next) + sum;
        sum = next;
    }
    sum += compensation;
    double denom = 1.0;
    for (int i = 1; i <= n; ++i) denom *= i;
    for (double ui : u) denom *= ui;
    return sum / denom;
}

WeightVector ones_weights(int n) {
    if (n < 1) throw invalid_parameter_error("weight vector needs n >= 1");
    return WeightVector(std::vector<Rational>(static_cast<std::size_t>(n), Rational(1)));
}

}  // namespace cubevol
