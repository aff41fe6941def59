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

#include "cubevol/json_io.hpp"

#include <cmath>

#include "cubevol/errors.hpp"

namespace cubevol {

using nlohmann::json;

json rational_to_json(const Rational& value) { return to_string(value); }

Rational rational_from_json(const json& node) {
    if (node.is_string()) return parse_rational(node.get<std::string>());
    if (node.is_number_integer()) return parse_rational(node.dump());
    throw parse_error("expected rational as \"p/q\" string or integer");
}

json rationals_to_json(std::span<const Rational> values) {
    json out = json::array();
    for (const Rational& v : values) out.push_back(rational_to_json(v));
    return out;
}

std::vector<Rational> rationals_from_json(const json& node) {
    if (!node.is_array()) throw parse_error("expected an array of rationals");
    std::vector<Rational> out;
    out.reserve(node.size());
    for (const auto& item : node) out.push_back(rational_from_json(item));
    return out;
}

json poly_to_json(const MultiPoly& poly) {
    json terms = json::array();
    for (const auto& [alpha, coeff] : poly.terms()) {
        json term;
        term["exponents"] = alpha;
        term["coeff"] = rational_to_json(coeff);
        terms.push_back(std::move(term));
    }
    return json{{"dim", poly.dimension()}, {"terms", std::move(terms)}};
}

MultiPoly poly_from_json(const json& node) {
    if (!node.is_object() || !node.contains("dim") || !node.contains("terms"))
        throw parse_error("polynomial JSON needs {\"dim\", \"terms\"}");
    int dim = node.at("dim").get<int>();
    MultiPoly poly(dim);
    for (const auto& term : node.at("terms")) {
        Exponents alpha = term.at("exponents").get<Exponents>();
        poly += MultiPoly::monomial(dim, std::move(alpha),
                                    rational_from_json(term.at("coeff")));
    }
    return poly;
}

json distribution_to_json(const UniformSumDistribution& d) {
    return json{{"coeffs", rationals_to_json(d.coefficients())},
                {"lowers", rationals_to_json(d.lowers())},
                {"uppers", rationals_to_json(d.uppers())}};
}

UniformSumDistribution distribution_from_json(const json& node) {
    if (!node.is_object() || !node.contains("coeffs"))
        throw parse_error("distribution JSON needs {\"coeffs\", \"lowers\", \"uppers\"}");
    std::vector<Rational> coeffs = rationals_from_json(node.at("coeffs"));
    std::vector<Rational> lowers, uppers;
    if (node.contains("lowers"))
        lowers = rationals_from_json(node.at("lowers"));
    else
        lowers.assign(coeffs.size(), Rational(0));
    if (node.contains("uppers"))
        uppers = rationals_from_json(node.at("uppers"));
    else
        uppers.assign(coeffs.size(), Rational(1));
    return UniformSumDistribution(std::move(coeffs), std::move(lowers), std::move(uppers));
}

json mc_check_json(const RegionSpec& region, const McEstimate& estimate) {
    Rational exact = region.exact_volume();
    double gap = std::fabs(estimate.mean - to_double(exact));
    bool pass = gap <= 3.0 * estimate.stderr_value;
    return json{{"region", region.describe()},
                {"exact", rational_to_json(exact)},
                {"estimate", estimate.mean},
                {"stderr", estimate.stderr_value},
                {"samples", estimate.samples},
                {"seed", estimate.seed},
                {"pass", pass}};
}

json grid_check_json(const RegionSpec& region, const Rational& estimate, int resolution) {
    Rational exact = region.exact_volume();
    Rational gap = abs(estimate - exact);
    bool pass = gap * resolution <= 2;  // first-order convergence budget
    return json{{"region", region.describe()},
                {"exact", rational_to_json(exact)},
                {"estimate", to_double(estimate)},
                {"resolution", resolution},
                {"tol", 2.0 / resolution},
                {"pass", pass}};
}

json sinc_check_json(const WeightVector& weights, const Rational& theta, const Rational& exact,
                     double estimate, double tol) {
    double gap = std::fabs(estimate - to_double(exact));
    return json{{"region", "central-slab on C^" + std::to_string(weights.dimension())},
                {"theta", to_string(theta)},
                {"exact", rational_to_json(exact)},
                {"estimate", estimate},
                {"tol", tol},
                {"pass", gap <= tol}};
}

json borwein_row_json(const BorweinRow& row) {
    return json{{"primes", row.primes},
                {"exact", rational_to_json(row.exact)},
                {"estimate", row.quadrature},
                {"tol", row.tol},
                {"discrepancy", row.discrepancy},
                {"covers_cube", row.covers_cube},
                {"first_deficit", row.first_deficit},
                {"pass", row.discrepancy <= row.tol}};
}

json volume_value_json(const VolumeValue& value) {
    return json{{"exact", rational_to_json(value.magnitude())},
                {"scale", value.scale() == VolumeScale::Unit ? "unit" : "l2norm"},
                {"float", value.float_value()}};
}

}  // namespace cubevol
