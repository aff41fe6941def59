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

#include "cubevol/polynomial.hpp"
#include "cubevol/weights.hpp"

namespace cubevol {

// Law of Y = sum c_i X_i with independent X_i uniform on [l_i, u_i]. The
// affine reduction X_i = l_i + (u_i - l_i) U_i maps everything to the unit
// cube: Y = z0 + sum w_i U_i with w_i = c_i (u_i - l_i) and z0 = sum c_i l_i,
// so the CDF is an exact cube-slice volume and the PDF a section magnitude.
class UniformSumDistribution {
  public:
    UniformSumDistribution(std::vector<Rational> coefficients, std::vector<Rational> lowers,
                           std::vector<Rational> uppers);

    /// Y = sum w_i U_i with U_i uniform on [0,1].
    static UniformSumDistribution canonical(std::vector<Rational> weights);
    /// Y = sum X_i with X_i uniform on [-a_i, a_i].
    static UniformSumDistribution symmetric(std::vector<Rational> half_widths);

    int dimension() const { return static_cast<int>(coefficients_.size()); }
    const std::vector<Rational>& coefficients() const { return coefficients_; }
    const std::vector<Rational>& lowers() const { return lowers_; }
    const std::vector<Rational>& uppers() const { return uppers_; }

    const WeightVector& canonical_weights() const { return canonical_weights_; }
    const Rational& offset() const { return offset_; }
    const Rational& support_min() const { return support_min_; }
    const Rational& support_max() const { return support_max_; }

  private:
    std::vector<Rational> coefficients_, lowers_, uppers_;
    WeightVector canonical_weights_;
    Rational offset_, support_min_, support_max_;
};

/// P[Y <= z], exact.
Rational cdf(const UniformSumDistribution& d, const Rational& z);

/// Density of Y at z, exact; at vertex levels the from-above value is used.
Rational pdf(const UniformSumDistribution& d, const Rational& z);

/// z with the exact CDF bracketed around q to width <= tol, by rational
/// bisection on the monotone CDF.
Rational quantile(const UniformSumDistribution& d, const Rational& q, const Rational& tol);

/// Product of independent Beta(alpha_i, beta_i) densities with integer
/// parameters >= 1; the density is then a polynomial on the unit cube.
struct BetaProductDensity {
    std::vector<unsigned> alphas;
    std::vector<unsigned> betas;

    int dimension() const { return static_cast<int>(alphas.size()); }
    MultiPoly density_poly() const;
};

/// P[sum w_i X_i <= z] for independent Beta-distributed X_i, exact via
/// polynomial integration over the sliced cube.
Rational beta_cdf(const WeightVector& weights, const BetaProductDensity& density,
                  const Rational& z);

/// Deterministic sampling of Y (mt19937_64 keyed by seed; uniforms are
/// 53-bit dyadics). Fixed algorithm so runs reproduce across platforms.
std::vector<double> sample(const UniformSumDistribution& d, std::uint64_t seed,
                           std::size_t count);

}  // namespace cubevol
