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

#include "cubevol/polynomial.hpp"

#include <numeric>

#include "cubevol/combinatorics.hpp"
#include "cubevol/config.hpp"
#include "cubevol/errors.hpp"

namespace cubevol {

namespace {

unsigned degree_of(const Exponents& alpha) {
    return std::accumulate(alpha.begin(), alpha.end(), 0u);
}

void check_integration_guards(const MultiPoly& f, const WeightVector& w) {
    if (f.dimension() != w.dimension())
        throw invalid_parameter_error("polynomial and weight dimensions do not match");
    if (w.dimension() > kMaxIntegrationDimension)
        throw invalid_parameter_error("integration supports n <= " +
                                      std::to_string(kMaxIntegrationDimension));
    check_dimension_cap(w.dimension());
    if (f.total_degree() > kMaxIntegrationDegree)
        throw invalid_parameter_error("integrand degree exceeds " +
                                      std::to_string(kMaxIntegrationDegree));
}

std::vector<int> sign_pattern(const WeightVector& w) {
    std::vector<int> signs(static_cast<std::size_t>(w.dimension()), 1);
    for (int i = 0; i < w.dimension(); ++i)
        if (w.negative_mask() >> i & 1) signs[static_cast<std::size_t>(i)] = -1;
    return signs;
}

// Shared core of the slice and section integrals. Every subset K of [n]
// contributes sign (-1)^{|K| + |N_w|} times the integral of the composed
// integrand f(A_w x + 1_K) over a corner simplex at level z - w.1_K; the
// section path integrates the z-derivative of each monomial term instead.
Rational signed_simplex_sum(const MultiPoly& f, const SliceQuery& raw_query, bool derivative) {
    SliceQuery query{raw_query.weights, canonical(raw_query.level), raw_query.cube};
    const WeightVector& w = query.weights;
    const int n = w.dimension();
    check_integration_guards(f, w);
    if (query.cube != Cube::Unit)
        throw invalid_parameter_error("polynomial integration is defined on the unit cube");
    if (f.is_zero()) return Rational(0);

    const std::vector<int> signs = sign_pattern(w);
    const WeightVector positive =
        w.all_positive() ? w : WeightVector(w.absolute_components());
    const bool base_negative = (w.negative_set().size() % 2) != 0;

    Rational total(0);
    std::vector<int> shift(static_cast<std::size_t>(n), 0);
    GraySubsets<Rational> cursor(n, w.components());
    do {
        Rational level = query.level - cursor.running_sum();
        bool live = derivative ? level >= 0 : level > 0;
        if (live) {
            for (int i = 0; i < n; ++i)
                shift[static_cast<std::size_t>(i)] = (cursor.mask() >> i & 1) ? 1 : 0;
            MultiPoly composed = f.compose_affine(signs, shift);
            Rational subtotal(0);
            for (const auto& [alpha, coeff] : composed.terms()) {
                if (derivative) {
                    // d/dz of the simplex integral: one lower truncated
                    // power, evaluated from above at breakpoints (0^0 = 1).
                    unsigned m = static_cast<unsigned>(n) + degree_of(alpha);
                    Rational power = (level == 0 && m == 1)
                                         ? Rational(1)
                                         : truncated_power(level, m - 1);
                    if (power == 0) continue;
                    Rational factor(1);
                    for (std::size_t i = 0; i < alpha.size(); ++i) {
                        factor *= factorial_integer(alpha[i]);
                        factor /= pow_rational(positive.component(static_cast<int>(i)),
                                               alpha[i] + 1);
                    }
                    subtotal += coeff * power * factor / factorial_integer(m - 1);
                } else {
                    subtotal += coeff * integrate_monomial_simplex(positive, level, alpha);
                }
            }
            bool negative = cursor.sign_negative() != base_negative;
            total += negative ? -subtotal : subtotal;
        }
    } while (cursor.advance());
    return total;
}

}  // namespace

MultiPoly::MultiPoly(int dimension) : dimension_(dimension) {
    if (dimension < 0) throw invalid_parameter_error("polynomial dimension must be >= 0");
}

MultiPoly MultiPoly::constant(int dimension, const Rational& value) {
    MultiPoly p(dimension);
    p.add_term(Exponents(static_cast<std::size_t>(dimension), 0), value);
    return p;
}

MultiPoly MultiPoly::monomial(int dimension, Exponents alpha, const Rational& coeff) {
    if (static_cast<int>(alpha.size()) != dimension)
        throw invalid_parameter_error("exponent vector length does not match dimension");
    MultiPoly p(dimension);
    p.add_term(std::move(alpha), coeff);
    return p;
}

MultiPoly MultiPoly::variable(int dimension, int index) {
    if (index < 0 || index >= dimension)
        throw invalid_parameter_error("variable index out of range");
    Exponents alpha(static_cast<std::size_t>(dimension), 0);
    alpha[static_cast<std::size_t>(index)] = 1;
    return monomial(dimension, std::move(alpha), Rational(1));
}

unsigned MultiPoly::total_degree() const {
    unsigned best = 0;
    for (const auto& [alpha, coeff] : terms_) best = std::max(best, degree_of(alpha));
    return best;
}

void MultiPoly::add_term(Exponents alpha, const Rational& coeff) {
    Rational reduced = canonical(coeff);
    if (reduced == 0) return;
    auto it = terms_.find(alpha);
    if (it == terms_.end()) {
        terms_.emplace(std::move(alpha), std::move(reduced));
    } else {
        it->second += reduced;
        if (it->second == 0) terms_.erase(it);
    }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& other) {
    if (other.dimension_ != dimension_)
        throw invalid_parameter_error("polynomial dimensions do not match");
    for (const auto& [alpha, coeff] : other.terms_) add_term(alpha, coeff);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& other) {
    if (other.dimension_ != dimension_)
        throw invalid_parameter_error("polynomial dimensions do not match");
    for (const auto& [alpha, coeff] : other.terms_) add_term(alpha, -coeff);
    return *this;
}

MultiPoly MultiPoly::operator*(const MultiPoly& other) const {
    if (other.dimension_ != dimension_)
        throw invalid_parameter_error("polynomial dimensions do not match");
    MultiPoly out(dimension_);
    for (const auto& [a, ca] : terms_) {
        for (const auto& [b, cb] : other.terms_) {
            Exponents merged(a);
            for (std::size_t i = 0; i < merged.size(); ++i) merged[i] += b[i];
            out.add_term(std::move(merged), ca * cb);
        }
    }
    return out;
}

MultiPoly MultiPoly::scaled(const Rational& factor) const {
    MultiPoly out(dimension_);
    if (factor == 0) return out;
    for (const auto& [alpha, coeff] : terms_) out.add_term(alpha, coeff * factor);
    return out;
}

Rational MultiPoly::evaluate(std::span<const Rational> point) const {
    if (static_cast<int>(point.size()) != dimension_)
        throw invalid_parameter_error("evaluation point has wrong dimension");
    Rational total(0);
    for (const auto& [alpha, coeff] : terms_) {
        Rational term = coeff;
        for (std::size_t i = 0; i < alpha.size(); ++i)
            if (alpha[i] != 0) term *= pow_rational(point[i], alpha[i]);
        total += term;
    }
    return total;
}

MultiPoly MultiPoly::compose_affine(std::span<const int> signs,
                                    std::span<const int> shift) const {
    if (static_cast<int>(signs.size()) != dimension_ ||
        static_cast<int>(shift.size()) != dimension_)
        throw invalid_parameter_error("affine data does not match polynomial dimension");
    MultiPoly out(dimension_);
    for (const auto& [alpha, coeff] : terms_) {
        // Expand prod_i (s_i x_i + t_i)^{alpha_i} one variable at a time.
        std::vector<std::pair<Exponents, Rational>> partial;
        partial.emplace_back(Exponents(static_cast<std::size_t>(dimension_), 0), coeff);
        for (std::size_t i = 0; i < alpha.size(); ++i) {
            unsigned a = alpha[i];
            if (a == 0) continue;
            bool flip = signs[i] < 0;
            if (shift[i] == 0) {
                Rational s = (flip && (a & 1)) ? Rational(-1) : Rational(1);
                for (auto& [exps, c] : partial) {
                    exps[i] += a;
                    c *= s;
                }
                continue;
            }
            std::vector<std::pair<Exponents, Rational>> next;
            next.reserve(partial.size() * (a + 1));
            for (const auto& [exps, c] : partial) {
                for (unsigned j = 0; j <= a; ++j) {
                    Rational factor = Rational(binomial(a, j));
                    if (flip && (j & 1)) factor = -factor;
                    Exponents e(exps);
                    e[i] += j;
                    next.emplace_back(std::move(e), c * factor);
                }
            }
            partial = std::move(next);
        }
        for (auto& [exps, c] : partial) out.add_term(std::move(exps), c);
    }
    return out;
}

Rational integrate_monomial_simplex(const WeightVector& weights, const Rational& level,
                                    const Exponents& alpha) {
    const int n = weights.dimension();
    if (!weights.all_positive())
        throw invalid_parameter_error("simplex integration needs all-positive weights");
    if (static_cast<int>(alpha.size()) != n)
        throw invalid_parameter_error("exponent vector length does not match dimension");
    if (level <= 0) return Rational(0);
    unsigned m = static_cast<unsigned>(n) + degree_of(alpha);
    Rational value = pow_rational(canonical(level), m) / factorial_integer(m);
    for (int i = 0; i < n; ++i) {
        unsigned a = alpha[static_cast<std::size_t>(i)];
        value *= factorial_integer(a);
        value /= pow_rational(weights.component(i), a + 1);
    }
    return value;
}

Rational integrate_poly_slice(const MultiPoly& f, const SliceQuery& query) {
    // Empty-slice exit; the full-cube case runs through the kernel so the
    // product-of-moments identity is an actual consequence, not a branch.
    if (query.level - query.weights.negative_sum() <= 0) return Rational(0);
    return signed_simplex_sum(f, query, /*derivative=*/false);
}

VolumeValue integrate_poly_section(const MultiPoly& f, const SectionQuery& query) {
    const WeightVector& w = query.weights;
    Rational reflected = query.level - w.negative_sum();
    if (query.cube != Cube::Unit)
        throw invalid_parameter_error("polynomial integration is defined on the unit cube");
    if (reflected < 0 || reflected > w.l1())
        return VolumeValue::l2(Rational(0), w.l2_squared());
    Rational magnitude =
        signed_simplex_sum(f, SliceQuery{w, query.level, Cube::Unit}, /*derivative=*/true);
    return VolumeValue::l2(magnitude, w.l2_squared());
}

}  // namespace cubevol
