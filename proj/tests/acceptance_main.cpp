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

// Acceptance suite: one check per release criterion, each printing a
// single PASS/FAIL line. The process exits nonzero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <vector>

#include "cubevol/combinatorics.hpp"
#include "cubevol/polynomial.hpp"
#include "cubevol/probability.hpp"
#include "cubevol/verify.hpp"
#include "cubevol/volume.hpp"

using namespace cubevol;

namespace {

Rational random_rational(std::mt19937_64& rng, long max_abs, bool allow_negative) {
    long num = 0;
    while (num == 0) num = static_cast<long>(rng() % (2 * max_abs + 1)) - max_abs;
    if (!allow_negative) num = std::labs(num);
    return make_rational(Integer(num), Integer(1 + static_cast<long>(rng() % 9)));
}

std::vector<Rational> random_weights(std::mt19937_64& rng, int n, bool allow_negative = true) {
    std::vector<Rational> w;
    for (int i = 0; i < n; ++i) w.push_back(random_rational(rng, 9, allow_negative));
    return w;
}

struct Check {
    bool ok = true;
    std::string detail;

    void expect(bool condition, const std::string& what) {
        if (!condition && ok) {
            ok = false;
            detail = what;
        }
    }
};

// 1. Slab volumes between consecutive integer levels reproduce the Eulerian
//    triangle exactly for every n <= 10.
Check criterion_eulerian() {
    Check check;
    for (int n = 1; n <= 10; ++n) {
        Integer nfact = factorial(static_cast<unsigned long>(n));
        for (int k = 0; k < n; ++k) {
            Rational expected = make_rational(eulerian(n, k), nfact);
            if (eulerian_slab_volume(n, k) != expected) {
                check.expect(false, "mismatch at n=" + std::to_string(n) +
                                        ", k=" + std::to_string(k));
                return check;
            }
        }
    }
    return check;
}

// 2. Prime-reciprocal slab: exactly 1 through p = 23; adding 1/29 yields the
//    closed-form deficit, with the documented float shadow.
Check criterion_borwein() {
    Check check;
    std::vector<Rational> w;
    for (int p : {3, 5, 7, 11, 13, 17, 19, 23}) w.push_back(Rational(1, p));
    Rational through_23 =
        slab_volume_centered(SlabQuery{WeightVector(w), Rational(1)}).magnitude();
    check.expect(through_23 == 1, "volume through 1/23 is not exactly 1");

    w.push_back(Rational(1, 29));
    VolumeValue with_29 = slab_volume_centered(SlabQuery{WeightVector(w), Rational(1)});
    Rational expected = 1 - pow_rational(Rational(54084649), 9) /
                                (Rational(181440) * pow_rational(Rational("3234846615"), 8));
    check.expect(with_29.magnitude() == expected, "closed-form deficit mismatch");
    check.expect(std::fabs(with_29.float_value() - 0.99999999999817987) < 1e-15,
                 "float shadow drifted from 0.99999999999817987");
    char printed[64];
    std::snprintf(printed, sizeof printed, "%.17g", with_29.float_value());
    check.expect(std::string(printed).substr(0, 16) == "0.99999999999817",
                 std::string("float shadow prints ") + printed);
    return check;
}

// 3. The three central-slab formulas and both central-section formulas agree
//    exactly over randomized mixed-sign queries; extreme levels clamp.
Check criterion_cross_equivalence() {
    Check check;
    std::mt19937_64 rng(20260810);
    for (int trial = 0; trial < 200 && check.ok; ++trial) {
        int n = 1 + static_cast<int>(rng() % 8);
        WeightVector weights(random_weights(rng, n));
        Rational theta =
            weights.l1() * frac(1 + static_cast<long>(rng() % 30), 31);
        SlabQuery slab{weights, theta};
        Rational polya = slab_volume_centered(slab, SlabVariant::Polya).magnitude();
        check.expect(polya == slab_volume_centered(slab, SlabVariant::AltA).magnitude(),
                     "polya/altA mismatch");
        check.expect(polya == slab_volume_centered(slab, SlabVariant::AltB).magnitude(),
                     "polya/altB mismatch");

        Rational full =
            central_section_volume(weights, CentralSectionVariant::Full).magnitude();
        Rational reduced =
            central_section_volume(weights, CentralSectionVariant::Reduced).magnitude();
        check.expect(full == reduced, "central-section variant mismatch");

        check.expect(slice_volume({weights, weights.negative_sum(), Cube::Unit})
                             .magnitude() == 0,
                     "lower clamp not exact");
        check.expect(slice_volume({weights, weights.positive_sum(), Cube::Unit})
                             .magnitude() == 1,
                     "upper clamp not exact");
    }
    return check;
}

// 4. The alternating subset-power identity holds exactly for negative and
//    fractional inputs with p <= n.
Check criterion_identity() {
    Check check;
    std::mt19937_64 rng(414243);
    for (int trial = 0; trial < 200 && check.ok; ++trial) {
        int n = 1 + static_cast<int>(rng() % 8);
        std::vector<Rational> w;
        for (int i = 0; i < n; ++i) {
            long num = static_cast<long>(rng() % 21) - 10;  // zeros allowed
            w.push_back(make_rational(Integer(num), Integer(1 + rng() % 9)));
        }
        Rational lambda = random_rational(rng, 12, true);
        unsigned p = static_cast<unsigned>(rng() % static_cast<unsigned>(n + 1));
        check.expect(identity_residual(w, lambda, p) == 0,
                     "nonzero residual at n=" + std::to_string(n) +
                         ", p=" + std::to_string(p));
    }
    return check;
}

// 5. Vaaler lower and Ball upper bounds hold as exact rational comparisons.
Check criterion_vaaler_ball() {
    Check check;
    std::mt19937_64 rng(515253);
    for (int trial = 0; trial < 100 && check.ok; ++trial) {
        int n = 1 + static_cast<int>(rng() % 10);
        WeightVector weights(random_weights(rng, n));
        Rational r = central_section_volume(weights).magnitude();
        Rational normalized = r * r * weights.l2_squared();
        check.expect(normalized >= 1, "Vaaler bound violated");
        check.expect(normalized <= 2, "Ball bound violated");
    }
    return check;
}

// 6. Geometric spot values: diagonal of the square, hexagon of the cube,
//    and the parallelotope fast path.
Check criterion_spot_values() {
    Check check;
    VolumeValue diag = central_section_volume(WeightVector({Rational(1), Rational(1)}));
    check.expect(std::fabs(diag.float_value() - std::sqrt(2.0)) <= 1e-12,
                 "C^2 diagonal section drifted");

    VolumeValue hexagon = central_section_volume(ones_weights(3));
    check.expect(hexagon.magnitude() == Rational(3, 4), "C^3 hexagon magnitude not 3/4");
    check.expect(std::fabs(hexagon.float_value() - 3.0 * std::sqrt(3.0) / 4.0) <= 1e-12,
                 "C^3 hexagon value drifted");

    // Hexagon oracle: exact squared area from the cross-product shoelace
    // over the six edge-midpoint vertices of the centered cube.
    std::vector<std::vector<Rational>> vertices = {
        {Rational(1, 2), Rational(-1, 2), Rational(0)},
        {Rational(1, 2), Rational(0), Rational(-1, 2)},
        {Rational(0), Rational(1, 2), Rational(-1, 2)},
        {Rational(-1, 2), Rational(1, 2), Rational(0)},
        {Rational(-1, 2), Rational(0), Rational(1, 2)},
        {Rational(0), Rational(-1, 2), Rational(1, 2)}};
    Rational cx(0), cy(0), cz(0);
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        const auto& a = vertices[i];
        const auto& b = vertices[(i + 1) % vertices.size()];
        cx += a[1] * b[2] - a[2] * b[1];
        cy += a[2] * b[0] - a[0] * b[2];
        cz += a[0] * b[1] - a[1] * b[0];
    }
    Rational area_squared = (cx * cx + cy * cy + cz * cz) / 4;
    check.expect(hexagon.magnitude() * hexagon.magnitude() * ones_weights(3).l2_squared() ==
                     area_squared,
                 "hexagon oracle mismatch");

    VolumeValue parallelotope =
        central_section_volume(WeightVector({Rational(3), Rational(1), Rational(1)}));
    check.expect(parallelotope.magnitude() == Rational(1, 3),
                 "parallelotope fast path magnitude not exactly 1/3");
    return check;
}

// 7. Monte Carlo and grid oracles agree with the exact kernels.
Check criterion_oracles() {
    Check check;
    std::mt19937_64 rng(717273);
    int mc_failures = 0;
    for (int trial = 0; trial < 50; ++trial) {
        int n = 2 + static_cast<int>(rng() % 9);
        WeightVector weights(random_weights(rng, n));
        RegionSpec region = RegionSpec::slice(weights, Rational(0), Cube::Unit);
        for (int attempt = 0; attempt < 64; ++attempt) {
            int kind = static_cast<int>(rng() % 3);
            if (kind == 0) {
                Rational z = weights.negative_sum() +
                             (weights.positive_sum() - weights.negative_sum()) *
                                 frac(1 + static_cast<long>(rng() % 63), 64);
                region = RegionSpec::slice(weights, z,
                                           rng() % 2 == 0 ? Cube::Unit : Cube::Centered);
            } else if (kind == 1) {
                Rational span = weights.positive_sum() - weights.negative_sum();
                Rational a = weights.negative_sum() +
                             span * frac(static_cast<long>(rng() % 32), 64);
                Rational b = a + span * frac(1 + static_cast<long>(rng() % 31), 64);
                region = RegionSpec::slab(weights, a, b, Cube::Unit);
            } else {
                Rational theta =
                    weights.l1() * frac(1 + static_cast<long>(rng() % 14), 16);
                region = RegionSpec::centered_slab(weights, theta);
            }
            Rational exact = region.exact_volume();
            if (exact >= Rational(1, 20) && exact <= Rational(19, 20)) break;
        }
        McEstimate estimate = mc_volume(region, 1'000'000, 0xC0FFEE + trial);
        double gap = std::fabs(estimate.mean - to_double(region.exact_volume()));
        if (gap > 3.0 * estimate.stderr_value) ++mc_failures;
    }
    check.expect(mc_failures <= 1, "Monte Carlo pass rate below 98% (" +
                                       std::to_string(50 - mc_failures) + "/50)");

    const int grid_dims[] = {1, 2, 3, 1, 2, 3, 2, 3};
    for (int trial = 0; trial < 8 && check.ok; ++trial) {
        int n = grid_dims[trial];
        WeightVector weights(random_weights(rng, n));
        Rational z = weights.negative_sum() +
                     (weights.positive_sum() - weights.negative_sum()) *
                         frac(1 + static_cast<long>(rng() % 31), 32);
        RegionSpec region = RegionSpec::slice(weights, z, Cube::Unit);
        Rational gap = abs(grid_volume(region, 256) - region.exact_volume());
        check.expect(gap <= Rational(1, 128),
                     "grid error above 2/256 at n=" + std::to_string(n));
    }
    return check;
}

// 8. Oscillatory sinc quadrature reproduces exact slab volumes at 1e-8.
Check criterion_sinc() {
    Check check;
    std::mt19937_64 rng(818283);
    for (int trial = 0; trial < 20 && check.ok; ++trial) {
        int n = 2 + static_cast<int>(rng() % 5);
        std::vector<Rational> w;
        for (int i = 0; i < n; ++i) {
            // Rational weights inside [1/10, 10].
            Rational candidate(0);
            do {
                candidate = make_rational(Integer(1 + static_cast<long>(rng() % 20)),
                                          Integer(1 + static_cast<long>(rng() % 10)));
            } while (candidate < Rational(1, 10) || candidate > 10);
            w.push_back(candidate);
        }
        WeightVector weights(w);
        Rational theta =
            weights.l1() * frac(1 + static_cast<long>(rng() % 17), 16);  // may cover
        QuadratureConfig config;  // abs_tol 1e-8, certified auto truncation
        double quad = sinc_slab_integral(weights, theta, config);
        double exact = to_double(slab_volume_centered(SlabQuery{weights, theta}).magnitude());
        check.expect(std::fabs(quad - exact) <= config.abs_tol,
                     "quadrature missed at trial " + std::to_string(trial));
    }
    return check;
}

// 9. Exact polynomial integration: product moments on the full cube, the
//    standard-triangle value, and section consistency.
Check criterion_integration() {
    Check check;
    std::mt19937_64 rng(919293);
    for (int trial = 0; trial < 20 && check.ok; ++trial) {
        int n = 1 + static_cast<int>(rng() % 6);
        WeightVector weights(random_weights(rng, n, /*allow_negative=*/false));
        Exponents alpha(static_cast<std::size_t>(n), 0);
        Rational expected(1);
        for (auto& a : alpha) {
            a = static_cast<unsigned>(rng() % 5);
            expected /= Rational(static_cast<long>(a) + 1);
        }
        MultiPoly f = MultiPoly::monomial(n, alpha, Rational(1));
        Rational value =
            integrate_poly_slice(f, {weights, weights.l1() + 1, Cube::Unit});
        check.expect(value == expected, "full-cube moment mismatch");
    }

    MultiPoly xy = MultiPoly::monomial(2, {1, 1}, Rational(1));
    check.expect(integrate_poly_slice(
                     xy, {WeightVector({Rational(1), Rational(1)}), Rational(1), Cube::Unit}) ==
                     Rational(1, 24),
                 "triangle integral of x*y is not exactly 1/24");

    for (int trial = 0; trial < 50 && check.ok; ++trial) {
        int n = 1 + static_cast<int>(rng() % 5);
        WeightVector weights(random_weights(rng, n));
        Rational span = weights.positive_sum() - weights.negative_sum();
        Rational z = weights.negative_sum() +
                     span * frac(1 + static_cast<long>(rng() % 89), 96) + Rational(1, 997);
        if (z >= weights.positive_sum()) continue;
        MultiPoly one = MultiPoly::constant(n, Rational(1));
        check.expect(integrate_poly_section(one, {weights, z, Cube::Unit}).magnitude() ==
                         section_volume({weights, z, Cube::Unit}).magnitude(),
                     "section integral of 1 deviates from section volume");
    }
    return check;
}

// 10. Probability layer: normalization, derivative consistency, the exact
//     beta value, and Monte Carlo agreement of the empirical CDF.
Check criterion_probability() {
    Check check;

    // Simpson normalization, integrating the exact pdf piecewise (the pdf
    // is a polynomial between consecutive vertex levels).
    for (int n : {4, 6, 8}) {
        std::vector<Rational> w;
        for (int i = 0; i < n; ++i)
            w.push_back(frac(i % 2 == 0 ? 1 : -1, 1 + i % 3) * frac(i + 2, 3));
        auto d = UniformSumDistribution::canonical(w);
        std::set<Rational> level_set;
        GraySubsets<Rational> cursor(n, w);
        do {
            level_set.insert(cursor.running_sum());
        } while (cursor.advance());
        std::vector<Rational> levels(level_set.begin(), level_set.end());
        double total = 0.0;
        const int panels = 48;
        for (std::size_t piece = 0; piece + 1 < levels.size(); ++piece) {
            Rational a = levels[piece];
            Rational width = levels[piece + 1] - a;
            double h = to_double(width) / panels;
            for (int j = 0; j < panels; ++j) {
                Rational left = a + width * frac(j, panels);
                Rational mid = a + width * frac(2 * j + 1, 2 * panels);
                Rational right = a + width * frac(j + 1, panels);
                total += h / 6.0 *
                         (to_double(pdf(d, left)) + 4.0 * to_double(pdf(d, mid)) +
                          to_double(pdf(d, right)));
            }
        }
        check.expect(std::fabs(total - 1.0) <= 1e-9,
                     "pdf normalization drifted at n=" + std::to_string(n) + " (" +
                         std::to_string(total) + ")");
    }

    // Finite-difference derivative agreement away from breakpoints.
    std::mt19937_64 rng(1010110);
    for (int trial = 0; trial < 10; ++trial) {
        int n = 2 + static_cast<int>(rng() % 7);
        std::vector<Rational> w = random_weights(rng, n);
        auto d = UniformSumDistribution::canonical(w);
        Rational z = d.support_min() + (d.support_max() - d.support_min()) *
                                           frac(1 + static_cast<long>(rng() % 89), 96) +
                     Rational(1, 977);
        double density = to_double(pdf(d, z));
        if (density < 1e-3) continue;
        Rational h(1, 1000000);
        double fd = (to_double(cdf(d, z + h)) - to_double(cdf(d, z - h))) / 2e-6;
        check.expect(std::fabs(fd - density) <= 1e-4 * density,
                     "cdf/pdf finite-difference mismatch");
    }

    check.expect(beta_cdf(WeightVector({Rational(1)}), BetaProductDensity{{2}, {1}},
                          Rational(1, 2)) == Rational(1, 4),
                 "beta cdf spot value is not exactly 1/4");

    // Empirical CDF within 3 sigma at five interior levels.
    auto d = UniformSumDistribution::canonical(
        {Rational(1), Rational(1, 2), Rational(2, 3), Rational(-3, 4)});
    auto draws = sample(d, 0xABCDEF, 1'000'000);
    for (int i = 1; i <= 5; ++i) {
        Rational z = d.support_min() +
                     (d.support_max() - d.support_min()) * frac(i, 6);
        double exact = to_double(cdf(d, z));
        double zd = to_double(z);
        auto below = static_cast<double>(std::count_if(
            draws.begin(), draws.end(), [zd](double y) { return y <= zd; }));
        double empirical = below / 1e6;
        double sigma = std::sqrt(exact * (1.0 - exact) / 1e6);
        check.expect(std::fabs(empirical - exact) <= 3.0 * sigma,
                     "empirical CDF outside 3 sigma at level " + std::to_string(i));
    }
    return check;
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* label;
        std::function<Check()> run;
        double time_limit = 0.0;  // seconds; 0 = no stated budget
    };
    std::vector<Criterion> criteria = {
        {1, "Eulerian slab volumes equal A(n,k)/n! for n <= 10", criterion_eulerian, 5.0},
        {2, "prime-reciprocal slab: exact closed form and float shadow", criterion_borwein,
         1.0},
        {3, "slab and central-section formula cross-equivalence (200 trials)",
         criterion_cross_equivalence},
        {4, "alternating subset-power identity (200 trials)", criterion_identity},
        {5, "Vaaler/Ball sandwich as exact comparisons (100 trials)", criterion_vaaler_ball},
        {6, "geometric spot values and parallelotope fast path", criterion_spot_values},
        {7, "Monte Carlo and grid oracle agreement", criterion_oracles},
        {8, "sinc quadrature matches exact slabs at 1e-8 (20 trials)", criterion_sinc, 30.0},
        {9, "exact polynomial integration checks", criterion_integration},
        {10, "probability layer: normalization, derivatives, beta, sampling",
         criterion_probability},
    };

    int failures = 0;
    for (const auto& criterion : criteria) {
        auto start = std::chrono::steady_clock::now();
        Check result;
        try {
            result = criterion.run();
        } catch (const std::exception& e) {
            result.ok = false;
            result.detail = std::string("exception: ") + e.what();
        }
        auto elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start);
        if (result.ok && criterion.time_limit > 0.0 && elapsed.count() > criterion.time_limit) {
            result.ok = false;
            result.detail = "exceeded the stated runtime budget of " +
                            std::to_string(criterion.time_limit) + "s";
        }
        std::printf("%s criterion %2d: %s (%.2fs)%s%s\n", result.ok ? "PASS" : "FAIL",
                    criterion.id, criterion.label, elapsed.count(),
                    result.detail.empty() ? "" : " -- ", result.detail.c_str());
        std::fflush(stdout);
        if (!result.ok) ++failures;
    }
    if (failures != 0) std::printf("%d criterion(s) failed\n", failures);
    return failures == 0 ? 0 : 1;
}
