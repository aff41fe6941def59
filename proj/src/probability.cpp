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

#include "cubevol/probability.hpp"

#include <random>

#include "cubevol/combinatorics.hpp"
#include "cubevol/errors.hpp"
#include "cubevol/volume.hpp"

namespace cubevol {

namespace {

// Validates the field triple, reduces every rational, and derives the
// unit-cube weights c_i (u_i - l_i).
WeightVector derive_canonical(std::vector<Rational>& coefficients,
                              std::vector<Rational>& lowers, std::vector<Rational>& uppers) {
    if (coefficients.empty() || lowers.size() != coefficients.size() ||
        uppers.size() != coefficients.size())
        throw invalid_parameter_error("distribution needs matching coeffs/lowers/uppers");
    std::vector<Rational> weights;
    weights.reserve(coefficients.size());
    for (std::size_t i = 0; i < coefficients.size(); ++i) {
        coefficients[i] = canonical(coefficients[i]);
        lowers[i] = canonical(lowers[i]);
        uppers[i] = canonical(uppers[i]);
        if (coefficients[i] == 0)
            throw invalid_parameter_error("distribution coefficients must be nonzero");
        if (!(uppers[i] > lowers[i]))
            throw invalid_parameter_error("distribution needs u_i > l_i");
        weights.push_back(coefficients[i] * (uppers[i] - lowers[i]));
    }
    return WeightVector(std::move(weights));
}

}  // namespace

UniformSumDistribution::UniformSumDistribution(std::vector<Rational> coefficients,
                                               std::vector<Rational> lowers,
                                               std::vector<Rational> uppers)
    : coefficients_(std::move(coefficients)),
      lowers_(std::move(lowers)),
      uppers_(std::move(uppers)),
      canonical_weights_(derive_canonical(coefficients_, lowers_, uppers_)) {
    offset_ = 0;
    for (std::size_t i = 0; i < coefficients_.size(); ++i)
        offset_ += coefficients_[i] * lowers_[i];
    support_min_ = offset_ + canonical_weights_.negative_sum();
    support_max_ = offset_ + canonical_weights_.positive_sum();
}

UniformSumDistribution UniformSumDistribution::canonical(std::vector<Rational> weights) {
    std::size_t n = weights.size();
    return UniformSumDistribution(std::move(weights), std::vector<Rational>(n, Rational(0)),
                                  std::vector<Rational>(n, Rational(1)));
}

UniformSumDistribution UniformSumDistribution::symmetric(std::vector<Rational> half_widths) {
    std::size_t n = half_widths.size();
    std::vector<Rational> lowers, uppers;
    lowers.reserve(n);
    uppers.reserve(n);
    for (const Rational& a : half_widths) {
        if (!(a > 0)) throw invalid_parameter_error("half widths must be positive");
        lowers.push_back(-a);
        uppers.push_back(a);
    }
    return UniformSumDistribution(std::vector<Rational>(n, Rational(1)), std::move(lowers),
                                  std::move(uppers));
}

Rational cdf(const UniformSumDistribution& d, const Rational& z) {
    return slice_volume(SliceQuery{d.canonical_weights(), z - d.offset(), Cube::Unit})
        .magnitude();
}

Rational pdf(const UniformSumDistribution& d, const Rational& z) {
    // The ||w||_2 factor of the section formula cancels against the
    // geometric thickness; the density is the bare rational magnitude.
    return section_volume(SectionQuery{d.canonical_weights(), z - d.offset(), Cube::Unit})
        .magnitude();
}

Rational quantile(const UniformSumDistribution& d, const Rational& q, const Rational& tol) {
    if (q < 0 || q > 1) throw invalid_parameter_error("quantile level must be in [0,1]");
    if (!(tol > 0)) throw invalid_parameter_error("quantile tolerance must be positive");
    if (q == 0) return d.support_min();
    if (q == 1) return d.support_max();
    Rational lo = d.support_min();
    Rational hi = d.support_max();
    while (hi - lo > tol) {
        Rational mid = (lo + hi) / 2;
        if (cdf(d, mid) < q)
            lo = mid;
        else
            hi = mid;
    }
    return (lo + hi) / 2;
}

MultiPoly BetaProductDensity::density_poly() const {
    if (alphas.empty() || alphas.size() != betas.size())
        throw invalid_parameter_error("beta density needs matching alpha/beta lists");
    const int n = dimension();
    MultiPoly density = MultiPoly::constant(n, Rational(1));
    for (int i = 0; i < n; ++i) {
        unsigned a = alphas[static_cast<std::size_t>(i)];
        unsigned b = betas[static_cast<std::size_t>(i)];
        if (a < 1 || b < 1)
            throw invalid_parameter_error("beta parameters must be integers >= 1");
        // x^(a-1) (1-x)^(b-1) expanded; 1/B(a,b) = (a+b-1)! / ((a-1)!(b-1)!).
        MultiPoly factor(n);
        for (unsigned j = 0; j <= b - 1; ++j) {
            Exponents alpha_vec(static_cast<std::size_t>(n), 0);
            alpha_vec[static_cast<std::size_t>(i)] = (a - 1) + j;
            Rational coeff = Rational(binomial(b - 1, j));
            if (j & 1) coeff = -coeff;
            factor += MultiPoly::monomial(n, std::move(alpha_vec), coeff);
        }
        Rational beta_inv = Rational(factorial_integer(a + b - 1)) /
                            (Rational(factorial_integer(a - 1)) * factorial_integer(b - 1));
        density = density * factor.scaled(beta_inv);
    }
    return density;
}

Rational beta_cdf(const WeightVector& weights, const BetaProductDensity& density,
                  const Rational& z) {
    if (density.dimension() != weights.dimension())
        throw invalid_parameter_error("beta density and weights dimensions do not match");
    return integrate_poly_slice(density.density_poly(), SliceQuery{weights, z, Cube::Unit});
}

std::vector<double> sample(const UniformSumDistribution& d, std::uint64_t seed,
                           std::size_t count) {
    std::vector<double> out;
    out.reserve(count);
    const int n = d.dimension();
    std::vector<double> coeff(static_cast<std::size_t>(n)), lo(static_cast<std::size_t>(n)),
        width(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        auto idx = static_cast<std::size_t>(i);
        coeff[idx] = to_double(d.coefficients()[idx]);
        lo[idx] = to_double(d.lowers()[idx]);
        width[idx] = to_double(d.uppers()[idx] - d.lowers()[idx]);
    }
    std::mt19937_64 rng(seed);
    for (std::size_t s = 0; s < count; ++s) {
        double y = 0.0;
        for (int i = 0; i < n; ++i) {
            auto idx = static_cast<std::size_t>(i);
            double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
            y += coeff[idx] * (lo[idx] + width[idx] * u);
        }
        out.push_back(y);
    }
    return out;
}

}  // namespace cubevol
