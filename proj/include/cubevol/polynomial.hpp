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

#include <map>
#include <span>
#include <vector>

#include "cubevol/rational.hpp"
#include "cubevol/weights.hpp"

namespace cubevol {

/// Exponent vector of a monomial prod x_i^{alpha_i}; one entry per variable.
using Exponents = std::vector<unsigned>;

// Guards for the integration routines: expanding f(Ax + 1_K) is binomially
// exponential in the degree, and the slice sum enumerates 2^n subsets.
inline constexpr unsigned kMaxIntegrationDegree = 40;
inline constexpr int kMaxIntegrationDimension = 20;

/// Sparse multivariate polynomial with exact rational coefficients. Zero
/// coefficients are never stored.
class MultiPoly {
  public:
    explicit MultiPoly(int dimension);

    static MultiPoly constant(int dimension, const Rational& value);
    static MultiPoly monomial(int dimension, Exponents alpha, const Rational& coeff);
    static MultiPoly variable(int dimension, int index);

    int dimension() const { return dimension_; }
    const std::map<Exponents, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    unsigned total_degree() const;

    MultiPoly& operator+=(const MultiPoly& other);
    MultiPoly& operator-=(const MultiPoly& other);
    friend MultiPoly operator+(MultiPoly lhs, const MultiPoly& rhs) { return lhs += rhs; }
    friend MultiPoly operator-(MultiPoly lhs, const MultiPoly& rhs) { return lhs -= rhs; }
    MultiPoly operator*(const MultiPoly& other) const;
    MultiPoly scaled(const Rational& factor) const;

    Rational evaluate(std::span<const Rational> point) const;

    /// Expanded g(x) = f(diag(signs) x + shift) with signs in {-1,+1} and
    /// shift in {0,1}: the change of variables of the signed decomposition.
    MultiPoly compose_affine(std::span<const int> signs, std::span<const int> shift) const;

  private:
    void add_term(Exponents alpha, const Rational& coeff);

    int dimension_;
    std::map<Exponents, Rational> terms_;
};

/// Exact integral of prod x_i^{alpha_i} over the corner simplex
/// {x >= 0, w.x <= c} with all-positive weights; zero when c <= 0.
Rational integrate_monomial_simplex(const WeightVector& weights, const Rational& level,
                                    const Exponents& alpha);

/// Exact integral of f over the sliced unit cube {w.x <= z} via the signed
/// decomposition into corner simplices.
Rational integrate_poly_slice(const MultiPoly& f, const SliceQuery& query);

/// Exact integral of f over the hyperplane section {w.x = z} of the unit
/// cube, computed as ||w||_2 d/dz of the slice integral. At a breakpoint
/// level the derivative is taken from above.
VolumeValue integrate_poly_section(const MultiPoly& f, const SectionQuery& query);

}  // namespace cubevol
