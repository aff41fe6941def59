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

#include <json.hpp>

#include "cubevol/polynomial.hpp"
#include "cubevol/probability.hpp"
#include "cubevol/verify.hpp"
#include "cubevol/weights.hpp"

namespace cubevol {

// JSON wire formats. Rationals always travel as "p/q" strings (never
// floats) so exactness survives the pipe; float shadows ride alongside.

nlohmann::json rational_to_json(const Rational& value);
Rational rational_from_json(const nlohmann::json& node);

nlohmann::json rationals_to_json(std::span<const Rational> values);
std::vector<Rational> rationals_from_json(const nlohmann::json& node);

/// {"dim": n, "terms": [{"exponents": [...], "coeff": "p/q"}, ...]}
nlohmann::json poly_to_json(const MultiPoly& poly);
MultiPoly poly_from_json(const nlohmann::json& node);

/// {"coeffs": [...], "lowers": [...], "uppers": [...]}
nlohmann::json distribution_to_json(const UniformSumDistribution& d);
UniformSumDistribution distribution_from_json(const nlohmann::json& node);

/// One report line per oracle check:
/// {"region": ..., "exact": "p/q", "estimate": v, "stderr"|"tol": e, "pass": b}
nlohmann::json mc_check_json(const RegionSpec& region, const McEstimate& estimate);
nlohmann::json grid_check_json(const RegionSpec& region, const Rational& estimate,
                               int resolution);
nlohmann::json sinc_check_json(const WeightVector& weights, const Rational& theta,
                               const Rational& exact, double estimate, double tol);
nlohmann::json borwein_row_json(const BorweinRow& row);

nlohmann::json volume_value_json(const VolumeValue& value);

}  // namespace cubevol
