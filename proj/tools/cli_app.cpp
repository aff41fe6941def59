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

#include "cli_app.hpp"

#include <CLI11.hpp>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <json.hpp>
#include <sstream>

#include "cubevol/combinatorics.hpp"
#include "cubevol/config.hpp"
#include "cubevol/errors.hpp"
#include "cubevol/json_io.hpp"
#include "cubevol/probability.hpp"
#include "cubevol/volume.hpp"

namespace cubevol::cli {

namespace {

using nlohmann::json;

constexpr int kSchemaVersion = 1;

std::vector<Rational> parse_rational_list(const std::string& csv) {
    std::vector<Rational> out;
    std::stringstream stream(csv);
    std::string item;
    while (std::getline(stream, item, ',')) out.push_back(parse_rational(item));
    if (out.empty()) throw parse_error("empty rational list");
    return out;
}

std::vector<unsigned> parse_unsigned_list(const std::string& csv) {
    std::vector<unsigned> out;
    std::stringstream stream(csv);
    std::string item;
    while (std::getline(stream, item, ',')) {
        Rational r = parse_rational(item);
        if (r.get_den() != 1 || r < 0) throw parse_error("expected nonnegative integers");
        out.push_back(static_cast<unsigned>(r.get_num().get_ui()));
    }
    if (out.empty()) throw parse_error("empty integer list");
    return out;
}

json load_json(const std::string& path_or_inline) {
    try {
        if (!path_or_inline.empty() && (path_or_inline[0] == '{' || path_or_inline[0] == '[')) {
            return json::parse(path_or_inline);
        }
        std::ifstream file(path_or_inline);
        if (!file) throw invalid_parameter_error("cannot open file: " + path_or_inline);
        return json::parse(file);
    } catch (const json::parse_error& e) {
        throw error("malformed_json", e.what());
    }
}

/// Weights come from --weights (comma-separated rationals) or --input
/// (JSON file holding {"weights": [...]} or a bare array).
std::vector<Rational> resolve_weights(const std::string& weights_csv,
                                      const std::string& input_path) {
    if (!weights_csv.empty()) return parse_rational_list(weights_csv);
    if (input_path.empty())
        throw invalid_parameter_error("weights required (--weights or --input)");
    json node = load_json(input_path);
    if (node.is_array()) return rationals_from_json(node);
    if (node.is_object() && node.contains("weights"))
        return rationals_from_json(node.at("weights"));
    throw invalid_parameter_error("input JSON needs a weights array");
}

Cube parse_cube(const std::string& name) {
    if (name == "unit") return Cube::Unit;
    if (name == "centered") return Cube::Centered;
    throw invalid_parameter_error("cube must be 'unit' or 'centered'");
}

json weights_meta(const WeightVector& w, const ReductionRecord& record, Cube cube) {
    json meta;
    meta["dim"] = w.dimension();
    meta["weights"] = rationals_to_json(w.components());
    meta["dropped"] = record.dropped_indices;
    meta["cube"] = cube == Cube::Unit ? "unit" : "centered";
    return meta;
}

json slice_meta(const SliceQuery& query, const ReductionRecord& record) {
    json meta = weights_meta(query.weights, record, query.cube);
    meta["level"] = to_string(query.level);
    SliceQuery unit = query;
    if (query.cube == Cube::Centered)
        unit = SliceQuery{query.weights, query.level + query.weights.total() / 2, Cube::Unit};
    SliceQuery reflected = reflect_to_positive(unit);
    meta["reflected"] = json{{"weights", rationals_to_json(reflected.weights.components())},
                             {"level", to_string(reflected.level)}};
    return meta;
}

void emit(std::ostream& out, json payload) {
    payload["schema"] = kSchemaVersion;
    out << payload.dump() << "\n";
}

struct DistributionFlags {
    std::string coeffs, lowers, uppers, dist;

    void attach(CLI::App* cmd) {
        cmd->add_option("--coeffs,--weights", coeffs,
                        "comma-separated coefficients (canonical uniforms when no bounds)");
        cmd->add_option("--lowers", lowers, "comma-separated lower support endpoints");
        cmd->add_option("--uppers", uppers, "comma-separated upper support endpoints");
        cmd->add_option("--dist", dist, "distribution spec JSON (file or inline)");
    }

    UniformSumDistribution build() const {
        if (!dist.empty()) return distribution_from_json(load_json(dist));
        if (coeffs.empty())
            throw invalid_parameter_error("distribution required (--coeffs or --dist)");
        std::vector<Rational> c = parse_rational_list(coeffs);
        std::vector<Rational> lo(c.size(), Rational(0)), up(c.size(), Rational(1));
        if (!lowers.empty()) lo = parse_rational_list(lowers);
        if (!uppers.empty()) up = parse_rational_list(uppers);
        return UniformSumDistribution(std::move(c), std::move(lo), std::move(up));
    }
};

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact volumes of hypercube slices, slabs, and sections"};
    app.require_subcommand(1);

    std::function<void()> action;

    // ---- volume ----
    auto* volume = app.add_subcommand("volume", "slice/slab/section volumes");
    volume->require_subcommand(1);

    {
        auto* cmd = volume->add_subcommand("slice", "halfspace slice of a cube");
        auto weights = std::make_shared<std::string>();
        auto input = std::make_shared<std::string>();
        auto level = std::make_shared<std::string>("0");
        auto cube = std::make_shared<std::string>("unit");
        auto float_only = std::make_shared<bool>(false);
        cmd->add_option("--weights", *weights, "comma-separated rational weights");
        cmd->add_option("--input", *input, "JSON file with a weights array");
        cmd->add_option("--level", *level, "halfspace level z")->required();
        cmd->add_option("--cube", *cube, "unit|centered");
        cmd->add_flag("--float-only", *float_only, "compensated floating-point path");
        cmd->callback([=, &out]() {
            auto [w, record] = normalize_weights(resolve_weights(*weights, *input));
            SliceQuery query{w, parse_rational(*level), parse_cube(*cube)};
            if (*float_only) {
                emit(out, json{{"exact", nullptr},
                               {"approximate", true},
                               {"scale", "unit"},
                               {"float", slice_volume_approx(query)},
                               {"meta", slice_meta(query, record)}});
                return;
            }
            json payload = volume_value_json(slice_volume(query));
            payload["meta"] = slice_meta(query, record);
            emit(out, payload);
        });
    }

    {
        auto* cmd = volume->add_subcommand("slab",
                                           "central slab (--thickness) or slab between levels");
        auto weights = std::make_shared<std::string>();
        auto input = std::make_shared<std::string>();
        auto thickness = std::make_shared<std::string>();
        auto z1 = std::make_shared<std::string>();
        auto z2 = std::make_shared<std::string>();
        auto cube = std::make_shared<std::string>("unit");
        auto variant = std::make_shared<std::string>("polya");
        cmd->add_option("--weights", *weights, "comma-separated rational weights");
        cmd->add_option("--input", *input, "JSON file with a weights array");
        cmd->add_option("--thickness", *thickness, "central slab thickness theta");
        cmd->add_option("--z1", *z1, "lower level");
        cmd->add_option("--z2", *z2, "upper level");
        cmd->add_option("--variant", *variant, "polya|alta|altb (central slab only)");
        cmd->add_option("--cube", *cube, "unit|centered (between-levels slab only)");
        cmd->callback([=, &out]() {
            auto [w, record] = normalize_weights(resolve_weights(*weights, *input));
            if (!thickness->empty()) {
                std::string name = *variant;
                for (char& c : name) c = static_cast<char>(std::tolower(c));
                SlabVariant var = SlabVariant::Polya;
                if (name == "alta")
                    var = SlabVariant::AltA;
                else if (name == "altb")
                    var = SlabVariant::AltB;
                else if (name != "polya")
                    throw invalid_parameter_error("variant must be polya|altA|altB");
                SlabQuery query{w, parse_rational(*thickness)};
                json payload = volume_value_json(slab_volume_centered(query, var));
                json meta = weights_meta(w, record, Cube::Centered);
                meta["thickness"] = to_string(query.thickness);
                meta["variant"] = *variant;
                payload["meta"] = std::move(meta);
                emit(out, payload);
                return;
            }
            if (z1->empty() || z2->empty())
                throw invalid_parameter_error("slab needs --thickness or both --z1/--z2");
            Cube c = parse_cube(*cube);
            json payload =
                volume_value_json(slab_between(w, parse_rational(*z1), parse_rational(*z2), c));
            json meta = weights_meta(w, record, c);
            meta["z1"] = to_string(parse_rational(*z1));
            meta["z2"] = to_string(parse_rational(*z2));
            payload["meta"] = std::move(meta);
            emit(out, payload);
        });
    }

    {
        auto* cmd = volume->add_subcommand("section", "hyperplane section of a cube");
        auto weights = std::make_shared<std::string>();
        auto input = std::make_shared<std::string>();
        auto level = std::make_shared<std::string>("0");
        auto cube = std::make_shared<std::string>("unit");
        cmd->add_option("--weights", *weights, "comma-separated rational weights");
        cmd->add_option("--input", *input, "JSON file with a weights array");
        cmd->add_option("--level", *level, "hyperplane level z")->required();
        cmd->add_option("--cube", *cube, "unit|centered");
        cmd->callback([=, &out]() {
            auto [w, record] = normalize_weights(resolve_weights(*weights, *input));
            SectionQuery query{w, parse_rational(*level), parse_cube(*cube)};
            json payload = volume_value_json(section_volume(query));
            json meta = weights_meta(w, record, query.cube);
            meta["level"] = to_string(query.level);
            payload["meta"] = std::move(meta);
            emit(out, payload);
        });
    }

    {
        auto* cmd = volume->add_subcommand("central-section",
                                           "central section of the centered cube");
        auto weights = std::make_shared<std::string>();
        auto input = std::make_shared<std::string>();
        auto variant = std::make_shared<std::string>("reduced");
        cmd->add_option("--weights", *weights, "comma-separated rational weights");
        cmd->add_option("--input", *input, "JSON file with a weights array");
        cmd->add_option("--variant", *variant, "full|reduced");
        cmd->callback([=, &out]() {
            auto [w, record] = normalize_weights(resolve_weights(*weights, *input));
            CentralSectionVariant var = CentralSectionVariant::Reduced;
            if (*variant == "full")
                var = CentralSectionVariant::Full;
            else if (*variant != "reduced")
                throw invalid_parameter_error("variant must be full|reduced");
            json payload = volume_value_json(central_section_volume(w, var));
            json meta = weights_meta(w, record, Cube::Centered);
            meta["variant"] = *variant;
            payload["meta"] = std::move(meta);
            emit(out, payload);
        });
    }

    // ---- eulerian ----
    {
        auto* cmd = app.add_subcommand("eulerian", "Eulerian number A(n,k)");
        auto n = std::make_shared<int>(0);
        auto k = std::make_shared<int>(0);
        auto check = std::make_shared<bool>(false);
        cmd->add_option("--n", *n)->required();
        cmd->add_option("--k", *k)->required();
        cmd->add_flag("--check-volume", *check, "also compute the matching slab volume");
        cmd->callback([=, &out]() {
            Integer a = eulerian(*n, *k);
            json payload{{"eulerian", a.get_str()}};
            if (*check) {
                Rational vol = eulerian_slab_volume(*n, *k);
                payload["volume"] = to_string(vol);
                payload["match"] =
                    vol == make_rational(a, factorial(static_cast<unsigned long>(*n)));
            }
            emit(out, payload);
        });
    }

    // ---- identity-check ----
    {
        auto* cmd = app.add_subcommand("identity-check",
                                       "alternating subset-power identity residual");
        auto weights = std::make_shared<std::string>();
        auto input = std::make_shared<std::string>();
        auto lambda = std::make_shared<std::string>("0");
        auto p = std::make_shared<unsigned>(0);
        cmd->add_option("--weights", *weights, "comma-separated rationals (zeros allowed)");
        cmd->add_option("--input", *input, "JSON file with a weights array");
        cmd->add_option("--lambda", *lambda, "shift value");
        cmd->add_option("--p", *p, "power")->required();
        cmd->callback([=, &out]() {
            std::vector<Rational> w = resolve_weights(*weights, *input);
            Rational residual = identity_residual(w, parse_rational(*lambda), *p);
            emit(out, json{{"residual", to_string(residual)},
                           {"holds", residual == 0},
                           {"p", *p},
                           {"lambda", to_string(parse_rational(*lambda))}});
        });
    }

    // ---- integrate ----
    auto* integrate = app.add_subcommand("integrate", "exact polynomial integrals");
    integrate->require_subcommand(1);

    {
        auto* cmd = integrate->add_subcommand("slice", "integral over a sliced unit cube");
        auto weights = std::make_shared<std::string>();
        auto input = std::make_shared<std::string>();
        auto level = std::make_shared<std::string>("0");
        auto poly = std::make_shared<std::string>();
        cmd->add_option("--weights", *weights, "comma-separated rational weights");
        cmd->add_option("--input", *input, "JSON file with a weights array");
        cmd->add_option("--level", *level)->required();
        cmd->add_option("--poly", *poly, "polynomial JSON (file or inline)")->required();
        cmd->callback([=, &out]() {
            auto [w, record] = normalize_weights(resolve_weights(*weights, *input));
            MultiPoly f = poly_from_json(load_json(*poly));
            Rational value =
                integrate_poly_slice(f, SliceQuery{w, parse_rational(*level), Cube::Unit});
            json meta = weights_meta(w, record, Cube::Unit);
            meta["level"] = to_string(parse_rational(*level));
            emit(out, json{{"exact", to_string(value)},
                           {"scale", "unit"},
                           {"float", to_double(value)},
                           {"meta", std::move(meta)}});
        });
    }

    {
        auto* cmd = integrate->add_subcommand("section", "integral over a cube section");
        auto weights = std::make_shared<std::string>();
        auto input = std::make_shared<std::string>();
        auto level = std::make_shared<std::string>("0");
        auto poly = std::make_shared<std::string>();
        cmd->add_option("--weights", *weights, "comma-separated rational weights");
        cmd->add_option("--input", *input, "JSON file with a weights array");
        cmd->add_option("--level", *level)->required();
        cmd->add_option("--poly", *poly, "polynomial JSON (file or inline)")->required();
        cmd->callback([=, &out]() {
            auto [w, record] = normalize_weights(resolve_weights(*weights, *input));
            MultiPoly f = poly_from_json(load_json(*poly));
            VolumeValue value =
                integrate_poly_section(f, SectionQuery{w, parse_rational(*level), Cube::Unit});
            json payload = volume_value_json(value);
            json meta = weights_meta(w, record, Cube::Unit);
            meta["level"] = to_string(parse_rational(*level));
            payload["meta"] = std::move(meta);
            emit(out, payload);
        });
    }

    {
        auto* cmd = integrate->add_subcommand("simplex", "monomial over a corner simplex");
        auto weights = std::make_shared<std::string>();
        auto input = std::make_shared<std::string>();
        auto level = std::make_shared<std::string>("1");
        auto alpha = std::make_shared<std::string>();
        cmd->add_option("--weights", *weights, "comma-separated positive rational weights");
        cmd->add_option("--input", *input, "JSON file with a weights array");
        cmd->add_option("--c", *level, "simplex level");
        cmd->add_option("--alpha", *alpha, "comma-separated exponents")->required();
        cmd->callback([=, &out]() {
            auto [w, record] = normalize_weights(resolve_weights(*weights, *input));
            Rational value =
                integrate_monomial_simplex(w, parse_rational(*level), parse_unsigned_list(*alpha));
            json meta = weights_meta(w, record, Cube::Unit);
            meta["c"] = to_string(parse_rational(*level));
            emit(out, json{{"exact", to_string(value)},
                           {"scale", "unit"},
                           {"float", to_double(value)},
                           {"meta", std::move(meta)}});
        });
    }

    // ---- cdf / pdf / quantile / sample ----
    {
        auto* cmd = app.add_subcommand(
            "cdf", "P[Y <= z] for a weighted sum of uniforms or integer betas");
        auto flags = std::make_shared<DistributionFlags>();
        auto z = std::make_shared<std::string>("0");
        auto alphas = std::make_shared<std::string>();
        auto betas = std::make_shared<std::string>();
        flags->attach(cmd);
        cmd->add_option("--alphas", *alphas, "beta alpha parameters (integers >= 1)");
        cmd->add_option("--betas", *betas, "beta beta parameters (integers >= 1)");
        cmd->add_option("--z", *z)->required();
        cmd->callback([=, &out]() {
            BetaProductDensity beta;
            if (!alphas->empty() || !betas->empty()) {
                beta.alphas = parse_unsigned_list(*alphas);
                beta.betas = parse_unsigned_list(*betas);
            } else if (!flags->dist.empty()) {
                json node = load_json(flags->dist);
                if (node.contains("alphas")) {
                    beta.alphas = node.at("alphas").get<std::vector<unsigned>>();
                    beta.betas = node.at("betas").get<std::vector<unsigned>>();
                }
            }
            if (!beta.alphas.empty()) {
                std::vector<Rational> w;
                if (!flags->coeffs.empty()) {
                    w = parse_rational_list(flags->coeffs);
                } else if (!flags->dist.empty()) {
                    json node = load_json(flags->dist);
                    w = rationals_from_json(node.at("coeffs"));
                } else {
                    throw invalid_parameter_error("beta cdf needs --coeffs or --dist");
                }
                WeightVector weights{w};
                Rational value = beta_cdf(weights, beta, parse_rational(*z));
                emit(out, json{{"exact", to_string(value)},
                               {"scale", "unit"},
                               {"float", to_double(value)},
                               {"meta", json{{"weights", rationals_to_json(w)},
                                             {"alphas", beta.alphas},
                                             {"betas", beta.betas}}}});
                return;
            }
            UniformSumDistribution d = flags->build();
            Rational value = cdf(d, parse_rational(*z));
            emit(out, json{{"exact", to_string(value)},
                           {"scale", "unit"},
                           {"float", to_double(value)},
                           {"meta", distribution_to_json(d)}});
        });
    }

    {
        auto* cmd = app.add_subcommand("pdf", "density of a weighted uniform sum");
        auto flags = std::make_shared<DistributionFlags>();
        auto z = std::make_shared<std::string>("0");
        flags->attach(cmd);
        cmd->add_option("--z", *z)->required();
        cmd->callback([=, &out]() {
            UniformSumDistribution d = flags->build();
            Rational value = pdf(d, parse_rational(*z));
            emit(out, json{{"exact", to_string(value)},
                           {"scale", "unit"},
                           {"float", to_double(value)},
                           {"meta", distribution_to_json(d)}});
        });
    }

    {
        auto* cmd = app.add_subcommand("quantile", "inverse CDF by rational bisection");
        auto flags = std::make_shared<DistributionFlags>();
        auto q = std::make_shared<std::string>("1/2");
        auto tol = std::make_shared<std::string>("1/1000000");
        flags->attach(cmd);
        cmd->add_option("--q", *q)->required();
        cmd->add_option("--tol", *tol, "bracket width tolerance");
        cmd->callback([=, &out]() {
            UniformSumDistribution d = flags->build();
            Rational value = quantile(d, parse_rational(*q), parse_rational(*tol));
            emit(out, json{{"quantile", to_string(value)},
                           {"float", to_double(value)},
                           {"q", to_string(parse_rational(*q))},
                           {"tol", to_string(parse_rational(*tol))},
                           {"meta", distribution_to_json(d)}});
        });
    }

    {
        auto* cmd = app.add_subcommand("sample", "seeded samples of the weighted sum");
        auto flags = std::make_shared<DistributionFlags>();
        auto seed = std::make_shared<std::uint64_t>(0);
        auto count = std::make_shared<std::uint64_t>(10);
        flags->attach(cmd);
        cmd->add_option("--seed", *seed)->required();
        cmd->add_option("--count", *count);
        cmd->callback([=, &out]() {
            UniformSumDistribution d = flags->build();
            std::vector<double> values = sample(d, *seed, *count);
            emit(out, json{{"samples", values},
                           {"seed", *seed},
                           {"count", *count},
                           {"meta", distribution_to_json(d)}});
        });
    }

    // ---- oracle checks ----
    auto region_flags = [](CLI::App* cmd, auto weights, auto input, auto kind, auto level,
                           auto z1, auto z2, auto thickness, auto cube) {
        cmd->add_option("--weights", *weights, "comma-separated rational weights");
        cmd->add_option("--input", *input, "JSON file with a weights array");
        cmd->add_option("--kind", *kind, "slice|slab|central-slab");
        cmd->add_option("--level", *level, "slice level");
        cmd->add_option("--z1", *z1, "slab lower level");
        cmd->add_option("--z2", *z2, "slab upper level");
        cmd->add_option("--thickness", *thickness, "central slab thickness");
        cmd->add_option("--cube", *cube, "unit|centered");
    };

    auto build_region = [](const std::string& weights_csv, const std::string& input,
                           const std::string& kind, const std::string& level,
                           const std::string& z1, const std::string& z2,
                           const std::string& thickness, const std::string& cube) {
        auto [w, record] = normalize_weights(resolve_weights(weights_csv, input));
        (void)record;
        if (kind == "slice") {
            if (level.empty()) throw invalid_parameter_error("slice region needs --level");
            return RegionSpec::slice(w, parse_rational(level), parse_cube(cube));
        }
        if (kind == "slab") {
            if (z1.empty() || z2.empty())
                throw invalid_parameter_error("slab region needs --z1 and --z2");
            return RegionSpec::slab(w, parse_rational(z1), parse_rational(z2),
                                    parse_cube(cube));
        }
        if (kind == "central-slab") {
            if (thickness.empty())
                throw invalid_parameter_error("central slab region needs --thickness");
            return RegionSpec::centered_slab(w, parse_rational(thickness));
        }
        throw invalid_parameter_error("kind must be slice|slab|central-slab");
    };

    {
        auto* cmd = app.add_subcommand("mc-check", "Monte Carlo oracle vs exact volume");
        auto weights = std::make_shared<std::string>();
        auto input = std::make_shared<std::string>();
        auto kind = std::make_shared<std::string>("slice");
        auto level = std::make_shared<std::string>();
        auto z1 = std::make_shared<std::string>();
        auto z2 = std::make_shared<std::string>();
        auto thickness = std::make_shared<std::string>();
        auto cube = std::make_shared<std::string>("unit");
        auto samples = std::make_shared<std::uint64_t>(1'000'000);
        auto seed = std::make_shared<std::uint64_t>(1);
        region_flags(cmd, weights, input, kind, level, z1, z2, thickness, cube);
        cmd->add_option("--samples", *samples);
        cmd->add_option("--seed", *seed);
        cmd->callback([=, &out]() {
            RegionSpec region =
                build_region(*weights, *input, *kind, *level, *z1, *z2, *thickness, *cube);
            json line = mc_check_json(region, mc_volume(region, *samples, *seed));
            line["meta"] = json{{"dim", region.weights.dimension()},
                                {"weights", rationals_to_json(region.weights.components())}};
            emit(out, std::move(line));
        });
    }

    {
        auto* cmd = app.add_subcommand("grid-check", "midpoint-grid oracle vs exact volume");
        auto weights = std::make_shared<std::string>();
        auto input = std::make_shared<std::string>();
        auto kind = std::make_shared<std::string>("slice");
        auto level = std::make_shared<std::string>();
        auto z1 = std::make_shared<std::string>();
        auto z2 = std::make_shared<std::string>();
        auto thickness = std::make_shared<std::string>();
        auto cube = std::make_shared<std::string>("unit");
        auto resolution = std::make_shared<int>(128);
        region_flags(cmd, weights, input, kind, level, z1, z2, thickness, cube);
        cmd->add_option("--resolution", *resolution, "cells per axis (<= 512, n <= 4)");
        cmd->callback([=, &out]() {
            RegionSpec region =
                build_region(*weights, *input, *kind, *level, *z1, *z2, *thickness, *cube);
            json line = grid_check_json(region, grid_volume(region, *resolution), *resolution);
            line["meta"] = json{{"dim", region.weights.dimension()},
                                {"weights", rationals_to_json(region.weights.components())}};
            emit(out, std::move(line));
        });
    }

    {
        auto* cmd = app.add_subcommand("sinc-check",
                                       "oscillatory quadrature vs exact central slab");
        auto weights = std::make_shared<std::string>();
        auto input = std::make_shared<std::string>();
        auto thickness = std::make_shared<std::string>("1");
        auto abs_tol = std::make_shared<double>(1e-8);
        auto truncation = std::make_shared<double>(0.0);
        auto max_panels = std::make_shared<std::uint64_t>(QuadratureConfig{}.max_panels);
        cmd->add_option("--weights", *weights, "comma-separated positive rational weights");
        cmd->add_option("--input", *input, "JSON file with a weights array");
        cmd->add_option("--thickness", *thickness, "slab thickness theta");
        cmd->add_option("--abs-tol", *abs_tol);
        cmd->add_option("--truncation", *truncation, "override the certified cutoff");
        cmd->add_option("--max-panels", *max_panels);
        cmd->callback([=, &out]() {
            auto [w, record] = normalize_weights(resolve_weights(*weights, *input));
            (void)record;
            Rational theta = parse_rational(*thickness);
            QuadratureConfig config{*abs_tol, *truncation, *max_panels};
            double estimate = sinc_slab_integral(w, theta, config);
            Rational exact = slab_volume_centered(SlabQuery{w, theta}).magnitude();
            json line = sinc_check_json(w, theta, exact, estimate, *abs_tol);
            line["meta"] = json{{"dim", w.dimension()},
                                {"weights", rationals_to_json(w.components())}};
            emit(out, std::move(line));
        });
    }

    {
        auto* cmd = app.add_subcommand("borwein", "prime-reciprocal slab volumes and integrals");
        auto max_prime = std::make_shared<int>(29);
        auto abs_tol = std::make_shared<double>(1e-12);
        cmd->add_option("--max-prime", *max_prime);
        cmd->add_option("--abs-tol", *abs_tol);
        cmd->callback([=, &out]() {
            QuadratureConfig config;
            config.abs_tol = *abs_tol;
            for (const BorweinRow& row : borwein_report(*max_prime, config)) {
                json line = borwein_row_json(row);
                line["schema"] = kSchemaVersion;
                out << line.dump() << "\n";
            }
        });
    }

    std::vector<const char*> argv;
    argv.push_back("cubevol");
    for (const std::string& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::Success& e) {
        return app.exit(e, out, err);  // --help and friends
    }
    return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    try {
        if (const char* cap = std::getenv("CUBEVOL_DIM_CAP")) {
            try {
                set_dimension_cap(std::stoi(cap));
            } catch (const std::exception&) {
                throw invalid_parameter_error("CUBEVOL_DIM_CAP must be an integer in range");
            }
        }
        return dispatch(args, out, err);
    } catch (const CLI::ParseError& e) {
        emit(out, json{{"error", json{{"code", "bad_arguments"}, {"message", e.what()}}}});
        return 2;
    } catch (const tolerance_error& e) {
        emit(out, json{{"error", json{{"code", e.code()}, {"message", e.what()}}}});
        return 1;
    } catch (const error& e) {
        emit(out, json{{"error", json{{"code", e.code()}, {"message", e.what()}}}});
        return 2;
    } catch (const std::exception& e) {
        emit(out, json{{"error", json{{"code", "internal_error"}, {"message", e.what()}}}});
        return 1;
    }
}

}  // namespace cubevol::cli
