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

#include "cubevol/verify.hpp"

#include <cmath>
#include <random>

#include "cubevol/errors.hpp"
#include "cubevol/volume.hpp"

namespace cubevol {

namespace {

constexpr double kPi = 3.14159265358979323846;

double safe_sinc(double y) {
    if (std::fabs(y) < 1e-4) {
        double y2 = y * y;
        return 1.0 - y2 / 6.0 + y2 * y2 / 120.0;
    }
    return std::sin(y) / y;
}

// QUADPACK 15-point Kronrod rule with the embedded 7-point Gauss rule.
constexpr double kKronrodNodes[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.0};
constexpr double kKronrodWeights[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kGaussWeights[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct PanelResult {
    double kronrod = 0.0;
    double gauss = 0.0;
};

template <typename F>
PanelResult gauss_kronrod_15(const F& f, double a, double b) {
    double center = 0.5 * (a + b);
    double half = 0.5 * (b - a);
    double fc = f(center);
    PanelResult out;
    out.kronrod = kKronrodWeights[7] * fc;
    out.gauss = kGaussWeights[3] * fc;
    for (int i = 0; i < 7; ++i) {
        double fsum = f(center - half * kKronrodNodes[i]) + f(center + half * kKronrodNodes[i]);
        out.kronrod += kKronrodWeights[i] * fsum;
        if (i % 2 == 1) out.gauss += kGaussWeights[i / 2] * fsum;
    }
    out.kronrod *= half;
    out.gauss *= half;
    return out;
}

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

}  // namespace

RegionSpec RegionSpec::slice(WeightVector w, Rational level, Cube cube) {
    RegionSpec r{RegionKind::Slice, std::move(w), std::move(level), Rational(0), Rational(0),
                 cube};
    return r;
}

RegionSpec RegionSpec::slab(WeightVector w, Rational z1, Rational z2, Cube cube) {
    if (z1 > z2) throw invalid_parameter_error("slab levels out of order (z1 > z2)");
    return RegionSpec{RegionKind::Slab, std::move(w), std::move(z1), std::move(z2), Rational(0),
                      cube};
}

RegionSpec RegionSpec::centered_slab(WeightVector w, Rational theta) {
    if (!(theta > 0)) throw invalid_parameter_error("slab thickness must be positive");
    return RegionSpec{RegionKind::CenteredSlab, std::move(w), Rational(0), Rational(0),
                      std::move(theta), Cube::Centered};
}

RegionSpec RegionSpec::section_adjacent(WeightVector w, Rational level, Rational thickness,
                                        Cube cube) {
    if (!(thickness > 0)) throw invalid_parameter_error("slab thickness must be positive");
    return RegionSpec{RegionKind::SectionAdjacentSlab, std::move(w), std::move(level),
                      Rational(0), std::move(thickness), cube};
}

std::pair<std::optional<Rational>, Rational> RegionSpec::level_bounds() const {
    switch (kind) {
        case RegionKind::Slice:
            return {std::nullopt, z1};
        case RegionKind::Slab:
            return {z1, z2};
        case RegionKind::CenteredSlab:
            return {-thickness / 2, thickness / 2};
        case RegionKind::SectionAdjacentSlab:
            return {z1, z1 + thickness};
    }
    throw invalid_parameter_error("unknown region kind");
}

bool RegionSpec::contains(std::span<const Rational> point) const {
    if (static_cast<int>(point.size()) != weights.dimension())
        throw invalid_parameter_error("point dimension does not match region");
    Rational dot(0);
    for (int i = 0; i < weights.dimension(); ++i)
        dot += weights.component(i) * point[static_cast<std::size_t>(i)];
    auto [lo, hi] = level_bounds();
    if (lo && dot < *lo) return false;
    return dot <= hi;
}

Rational RegionSpec::exact_volume() const {
    switch (kind) {
        case RegionKind::Slice:
            return slice_volume(SliceQuery{weights, z1, cube}).magnitude();
        case RegionKind::Slab:
            return slab_between(weights, z1, z2, cube).magnitude();
        case RegionKind::CenteredSlab:
            return slab_volume_centered(SlabQuery{weights, thickness}).magnitude();
        case RegionKind::SectionAdjacentSlab:
            return slab_between(weights, z1, z1 + thickness, cube).magnitude();
    }
    throw invalid_parameter_error("unknown region kind");
}

std::string RegionSpec::describe() const {
    std::string name;
    switch (kind) {
        case RegionKind::Slice: name = "slice"; break;
        case RegionKind::Slab: name = "slab"; break;
        case RegionKind::CenteredSlab: name = "central-slab"; break;
        case RegionKind::SectionAdjacentSlab: name = "section-adjacent-slab"; break;
    }
    name += cube == Cube::Unit ? " on I^" : " on C^";
    name += std::to_string(weights.dimension());
    return name;
}

McEstimate mc_volume(const RegionSpec& region, std::uint64_t samples, std::uint64_t seed) {
    if (samples < 1) throw invalid_parameter_error("mc_volume needs samples >= 1");
    const int n = region.weights.dimension();
    std::vector<double> w(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        w[static_cast<std::size_t>(i)] = to_double(region.weights.component(i));
    auto [lo, hi] = region.level_bounds();
    const double hi_d = to_double(hi);
    const bool has_lo = lo.has_value();
    const double lo_d = has_lo ? to_double(*lo) : 0.0;
    const double origin = region.cube == Cube::Centered ? -0.5 : 0.0;

    // Samples are drawn in fixed blocks keyed by (seed, block), so any
    // partition of the sample range regenerates exactly the same points.
    constexpr std::uint64_t kBlock = 4096;
    std::mt19937_64 rng;
    std::uint64_t hits = 0;
    for (std::uint64_t s = 0; s < samples; ++s) {
        if (s % kBlock == 0) rng.seed(splitmix64(seed ^ splitmix64(s / kBlock)));
        double dot = 0.0;
        for (int i = 0; i < n; ++i) {
            double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
            dot += w[static_cast<std::size_t>(i)] * (origin + u);
        }
        if (dot <= hi_d && (!has_lo || dot >= lo_d)) ++hits;
    }
    McEstimate est;
    est.samples = samples;
    est.seed = seed;
    est.mean = static_cast<double>(hits) / static_cast<double>(samples);
    est.stderr_value = std::sqrt(est.mean * (1.0 - est.mean) / static_cast<double>(samples));
    return est;
}

Rational grid_volume(const RegionSpec& region, int resolution) {
    const int n = region.weights.dimension();
    if (n > 4) throw invalid_parameter_error("grid_volume supports n <= 4");
    if (resolution < 1 || resolution > 512)
        throw invalid_parameter_error("grid_volume supports resolution in [1, 512]");

    auto [lo, hi] = region.level_bounds();
    // Clear denominators so each cell-center test is an integer comparison:
    // the center coordinate is (2k+1-offset)/(2R) and membership becomes
    // lo*2RD <= sum W_i (2k_i+1-offset) <= hi*2RD with W_i = w_i D.
    std::vector<Rational> all = region.weights.components();
    all.push_back(hi);
    if (lo) all.push_back(*lo);
    ClearedIntegers cleared = clear_denominators(all);
    const Integer two_r(2 * resolution);
    const int offset = region.cube == Cube::Centered ? resolution : 0;

    Integer hi_scaled = cleared.scaled[static_cast<std::size_t>(n)] * two_r;
    Integer lo_scaled(0);
    if (lo) lo_scaled = cleared.scaled[static_cast<std::size_t>(n + 1)] * two_r;

    std::vector<std::vector<Integer>> axis(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        auto& table = axis[static_cast<std::size_t>(i)];
        table.reserve(static_cast<std::size_t>(resolution));
        for (int k = 0; k < resolution; ++k)
            table.push_back(cleared.scaled[static_cast<std::size_t>(i)] * (2 * k + 1 - offset));
    }

    std::uint64_t count = 0;
    std::vector<int> index(static_cast<std::size_t>(n), 0);
    std::vector<Integer> prefix(static_cast<std::size_t>(n) + 1, Integer(0));
    int depth = 0;
    while (depth >= 0) {
        if (depth == n) {
            const Integer& dot = prefix[static_cast<std::size_t>(n)];
            if (dot <= hi_scaled && (!lo || dot >= lo_scaled)) ++count;
            --depth;
            continue;
        }
        int& k = index[static_cast<std::size_t>(depth)];
        if (k == resolution) {
            k = 0;
            --depth;
            if (depth >= 0) ++index[static_cast<std::size_t>(depth)];
            continue;
        }
        prefix[static_cast<std::size_t>(depth) + 1] =
            prefix[static_cast<std::size_t>(depth)] +
            axis[static_cast<std::size_t>(depth)][static_cast<std::size_t>(k)];
        if (depth == n - 1) {
            const Integer& dot = prefix[static_cast<std::size_t>(n)];
            if (dot <= hi_scaled && (!lo || dot >= lo_scaled)) ++count;
            ++k;
            continue;
        }
        ++depth;
    }

    Integer cells;
    mpz_ui_pow_ui(cells.get_mpz_t(), static_cast<unsigned long>(resolution),
                  static_cast<unsigned long>(n));
    return make_rational(Integer(count), cells);
}

double sinc_slab_integral(const WeightVector& weights, const Rational& theta,
                          const QuadratureConfig& config) {
    if (!weights.all_positive())
        throw invalid_parameter_error("sinc quadrature needs all-positive weights");
    if (!(theta > 0)) throw invalid_parameter_error("slab thickness must be positive");
    if (!(config.abs_tol > 0)) throw invalid_parameter_error("abs_tol must be positive");
    const int n = weights.dimension();
    std::vector<double> w(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        w[static_cast<std::size_t>(i)] = to_double(weights.component(i));
    const double th = to_double(theta);
    const double log_prod = std::log(to_double(weights.product()));

    double truncation = config.truncation;
    if (truncation <= 0.0) {
        // Certified tail: |integrand| <= 1/(x^(n+1) prod w), so the tail
        // beyond T is at most 1/(n T^n prod w); solve for tol/2.
        truncation = std::exp((std::log(2.0 / (n * config.abs_tol)) - log_prod) / n);
        truncation = std::max(truncation, kPi / th);
    }

    const auto integrand = [&](double x) {
        double value = (2.0 / kPi) * th * safe_sinc(th * x);
        for (double wi : w) value *= safe_sinc(wi * x);
        return value;
    };

    double freq = th;
    for (double wi : w) freq += wi;
    const double leading = kPi / th;

    // Panels are subdivisions of [k pi/theta, (k+1) pi/theta] no wider than
    // an eighth period of the fastest combined oscillation; GK15 is then
    // accurate to near machine precision per panel. If the global
    // Gauss/Kronrod discrepancy still exceeds the budget, halve and retry.
    std::uint64_t substeps = static_cast<std::uint64_t>(std::ceil(4.0 * freq / th));
    for (;;) {
        double step = leading / static_cast<double>(substeps);
        std::uint64_t panels = static_cast<std::uint64_t>(std::ceil(truncation / step));
        if (panels > config.max_panels)
            throw tolerance_error("sinc quadrature needs " + std::to_string(panels) +
                                  " panels; max_panels=" + std::to_string(config.max_panels));
        double kron = 0.0, kron_c = 0.0;
        double gauss = 0.0, gauss_c = 0.0;
        for (std::uint64_t k = 0; k < panels; ++k) {
            double a = static_cast<double>(k) * step;
            double b = (k + 1 == panels) ? truncation : a + step;
            PanelResult p = gauss_kronrod_15(integrand, a, b);
            double y = p.kronrod - kron_c;
            double t = kron + y;
            kron_c = (t - kron) - y;
            kron = t;
            double yg = p.gauss - gauss_c;
            double tg = gauss + yg;
            gauss_c = (tg - gauss) - yg;
            gauss = tg;
        }
        if (std::fabs(kron - gauss) <= 0.5 * config.abs_tol) return kron;
        substeps *= 2;
    }
}

std::vector<BorweinRow> borwein_report(int max_prime, const QuadratureConfig& config) {
    if (max_prime < 3) throw invalid_parameter_error("borwein report needs max_prime >= 3");
    std::vector<int> primes;
    for (int p = 3; p <= max_prime; p += 2) {
        bool prime = true;
        for (int d = 3; d * d <= p; d += 2)
            if (p % d == 0) {
                prime = false;
                break;
            }
        if (prime) primes.push_back(p);
    }

    std::vector<BorweinRow> rows;
    std::vector<Rational> w;
    bool deficit_seen = false;
    for (std::size_t m = 0; m < primes.size(); ++m) {
        w.push_back(Rational(1, primes[m]));
        BorweinRow row;
        row.primes.assign(primes.begin(), primes.begin() + static_cast<std::ptrdiff_t>(m) + 1);
        WeightVector weights{w};
        row.exact =
            slab_volume_centered(SlabQuery{weights, Rational(1)}, SlabVariant::AltA).magnitude();

        // Tail bound 1/(n T^n prod w) decays slowly for short prefixes; pick
        // the tightest tolerance whose certified truncation fits the panel
        // budget (a quarter of max_panels, leaving room for refinement).
        const int n = weights.dimension();
        double freq = 1.0;
        for (const Rational& wi : w) freq += to_double(wi);
        double budget =
            static_cast<double>(std::min<std::uint64_t>(config.max_panels / 4, 1'500'000));
        double t_budget = budget * kPi / (4.0 * freq);
        double prodw = to_double(weights.product());
        double tol_budget = 2.0 / (n * std::pow(t_budget, n) * prodw);
        QuadratureConfig row_config = config;
        row_config.abs_tol = std::max(config.abs_tol, 1.25 * tol_budget);
        row.tol = row_config.abs_tol;

        row.quadrature = sinc_slab_integral(weights, Rational(1), row_config);
        row.discrepancy = std::fabs(row.quadrature - to_double(row.exact));
        row.covers_cube = row.exact == 1;
        if (!row.covers_cube && !deficit_seen) {
            row.first_deficit = true;
            deficit_seen = true;
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace cubevol
