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

#include <doctest.h>

#include <json.hpp>
#include <sstream>

#include "cli_app.hpp"
#include <cstdlib>

#include "cubevol/config.hpp"
#include "cubevol/errors.hpp"
#include "cubevol/json_io.hpp"
#include "cubevol/volume.hpp"

using namespace cubevol;
using nlohmann::json;

namespace {

struct CliResult {
    int exit_code = 0;
    json payload;
    std::vector<json> lines;
};

CliResult run_cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    CliResult result;
    result.exit_code = cli::run(args, out, err);
    std::istringstream stream(out.str());
    std::string line;
    while (std::getline(stream, line))
        if (!line.empty()) result.lines.push_back(json::parse(line));
    if (!result.lines.empty()) result.payload = result.lines.front();
    return result;
}

}  // namespace

TEST_CASE("volume slice through the CLI matches the library bit for bit") {
    auto result = run_cli({"volume", "slice", "--weights", "1,1", "--level", "1"});
    REQUIRE(result.exit_code == 0);
    CHECK(result.payload.at("schema") == 1);
    CHECK(result.payload.at("exact") == "1/2");
    CHECK(result.payload.at("scale") == "unit");
    VolumeValue direct =
        slice_volume({WeightVector({Rational(1), Rational(1)}), Rational(1), Cube::Unit});
    CHECK(result.payload.at("float").get<double>() == direct.float_value());
    CHECK(result.payload.at("meta").at("dim") == 2);
}

TEST_CASE("meta echoes the normalized and reflected query") {
    auto result =
        run_cli({"volume", "slice", "--weights", "-1,0,1", "--level", "0"});
    REQUIRE(result.exit_code == 0);
    const json& meta = result.payload.at("meta");
    CHECK(meta.at("dim") == 2);
    CHECK(meta.at("dropped") == json::array({1}));
    CHECK(meta.at("weights") == json::array({"-1", "1"}));
    CHECK(meta.at("reflected").at("weights") == json::array({"1", "1"}));
    CHECK(meta.at("reflected").at("level") == "1");
}

TEST_CASE("eulerian with volume check") {
    auto result = run_cli({"eulerian", "--n", "3", "--k", "1", "--check-volume"});
    REQUIRE(result.exit_code == 0);
    CHECK(result.payload.at("eulerian") == "4");
    CHECK(result.payload.at("volume") == "2/3");
    CHECK(result.payload.at("match") == true);
}

TEST_CASE("identity check") {
    auto result = run_cli(
        {"identity-check", "--weights", "-2,5", "--lambda", "1/3", "--p", "1"});
    REQUIRE(result.exit_code == 0);
    CHECK(result.payload.at("residual") == "0");
    CHECK(result.payload.at("holds") == true);
}

TEST_CASE("integrate slice with inline polynomial JSON") {
    std::string poly = R"({"dim":2,"terms":[{"exponents":[1,1],"coeff":"1"}]})";
    auto result = run_cli(
        {"integrate", "slice", "--weights", "1,1", "--level", "1", "--poly", poly});
    REQUIRE(result.exit_code == 0);
    CHECK(result.payload.at("exact") == "1/24");
}

TEST_CASE("cdf, pdf, quantile, sample") {
    auto c = run_cli({"cdf", "--coeffs", "1,1", "--z", "1"});
    REQUIRE(c.exit_code == 0);
    CHECK(c.payload.at("exact") == "1/2");

    auto p = run_cli({"pdf", "--coeffs", "1,1", "--z", "1"});
    REQUIRE(p.exit_code == 0);
    CHECK(p.payload.at("exact") == "1");

    auto q = run_cli({"quantile", "--coeffs", "1,1", "--q", "1/2", "--tol", "1/1024"});
    REQUIRE(q.exit_code == 0);
    CHECK(std::fabs(q.payload.at("float").get<double>() - 1.0) <= 1.0 / 1024);

    auto s1 = run_cli({"sample", "--coeffs", "1,1", "--seed", "9", "--count", "5"});
    auto s2 = run_cli({"sample", "--coeffs", "1,1", "--seed", "9", "--count", "5"});
    REQUIRE(s1.exit_code == 0);
    CHECK(s1.payload.at("samples") == s2.payload.at("samples"));
    CHECK(s1.payload.at("samples").size() == 5);
}

TEST_CASE("oracle subcommands emit check lines") {
    auto mc = run_cli({"mc-check", "--kind", "slice", "--weights", "1,1", "--level", "1",
                       "--samples", "200000", "--seed", "3"});
    REQUIRE(mc.exit_code == 0);
    CHECK(mc.payload.at("exact") == "1/2");
    CHECK(mc.payload.at("pass") == true);

    auto grid = run_cli({"grid-check", "--kind", "slice", "--weights", "1,2,3", "--level",
                         "2", "--resolution", "64"});
    REQUIRE(grid.exit_code == 0);
    CHECK(grid.payload.at("exact") == "7/36");
    CHECK(grid.payload.at("pass") == true);

    auto sinc = run_cli({"sinc-check", "--weights", "1/2,1/3", "--thickness", "1",
                         "--abs-tol", "1e-8"});
    REQUIRE(sinc.exit_code == 0);
    CHECK(sinc.payload.at("pass") == true);
}

TEST_CASE("borwein emits one JSON line per prime prefix") {
    auto result = run_cli({"borwein", "--max-prime", "29"});
    REQUIRE(result.exit_code == 0);
    REQUIRE(result.lines.size() == 9);
    CHECK(result.lines.front().at("exact") == "1");
    const json& last = result.lines.back();
    CHECK(last.at("covers_cube") == false);
    CHECK(last.at("first_deficit") == true);
    CHECK(last.at("pass") == true);
    std::string exact = last.at("exact").get<std::string>();
    Rational expected = 1 - pow_rational(Rational(54084649), 9) /
                                (Rational(181440) * pow_rational(Rational("3234846615"), 8));
    CHECK(parse_rational(exact) == expected);
}

TEST_CASE("float-only flag marks approximate output") {
    auto result = run_cli(
        {"volume", "slice", "--weights", "1,2,3", "--level", "2", "--float-only"});
    REQUIRE(result.exit_code == 0);
    CHECK(result.payload.at("exact").is_null());
    CHECK(result.payload.at("approximate") == true);
    CHECK(result.payload.at("float").get<double>() == doctest::Approx(7.0 / 36).epsilon(1e-12));
}

TEST_CASE("beta cdf through the CLI") {
    auto flag_form = run_cli({"cdf", "--coeffs", "1", "--alphas", "2", "--betas", "1",
                              "--z", "1/2"});
    REQUIRE(flag_form.exit_code == 0);
    CHECK(flag_form.payload.at("exact") == "1/4");

    std::string dist = R"({"coeffs":["1"],"alphas":[2],"betas":[1]})";
    auto json_form = run_cli({"cdf", "--dist", dist, "--z", "1/2"});
    REQUIRE(json_form.exit_code == 0);
    CHECK(json_form.payload.at("exact") == "1/4");
}

TEST_CASE("slab variants accept the altA/altB spellings") {
    auto a = run_cli({"volume", "slab", "--weights", "1,1", "--thickness", "1",
                      "--variant", "altA"});
    auto b = run_cli({"volume", "slab", "--weights", "1,1", "--thickness", "1",
                      "--variant", "altb"});
    REQUIRE(a.exit_code == 0);
    REQUIRE(b.exit_code == 0);
    CHECK(a.payload.at("exact") == "3/4");
    CHECK(b.payload.at("exact") == "3/4");
}

TEST_CASE("environment variable overrides the dimension cap") {
    setenv("CUBEVOL_DIM_CAP", "3", 1);
    auto blocked = run_cli({"volume", "slice", "--weights", "1,1,1,1", "--level", "2"});
    CHECK(blocked.exit_code == 2);
    CHECK(blocked.payload.at("error").at("code") == "dimension_cap");
    unsetenv("CUBEVOL_DIM_CAP");
    set_dimension_cap(kDefaultDimensionCap);
    auto allowed = run_cli({"volume", "slice", "--weights", "1,1,1,1", "--level", "2"});
    CHECK(allowed.exit_code == 0);
}

TEST_CASE("error paths carry machine-readable codes") {
    auto bad_args = run_cli({"volume", "slice", "--weights", "1,1"});
    CHECK(bad_args.exit_code == 2);
    CHECK(bad_args.payload.at("error").at("code") == "bad_arguments");

    auto bad_rational = run_cli(
        {"volume", "slice", "--weights", "1,zebra", "--level", "1"});
    CHECK(bad_rational.exit_code == 2);
    CHECK(bad_rational.payload.at("error").at("code") == "invalid_rational");

    auto degenerate = run_cli({"volume", "slice", "--weights", "0,0", "--level", "1"});
    CHECK(degenerate.exit_code == 2);
    CHECK(degenerate.payload.at("error").at("code") == "degenerate_weights");

    auto bad_json = run_cli({"integrate", "slice", "--weights", "1,1", "--level", "1",
                             "--poly", "{not json"});
    CHECK(bad_json.exit_code == 2);
    CHECK(bad_json.payload.at("error").at("code") == "malformed_json");

    auto bad_order = run_cli({"volume", "slab", "--weights", "1,1", "--z1", "2", "--z2", "1"});
    CHECK(bad_order.exit_code == 2);
    CHECK(bad_order.payload.at("error").at("code") == "invalid_parameter");

    auto unachievable = run_cli({"sinc-check", "--weights", "1/10", "--thickness", "1",
                                 "--abs-tol", "1e-10", "--max-panels", "10"});
    CHECK(unachievable.exit_code == 1);
    CHECK(unachievable.payload.at("error").at("code") == "tolerance_unachievable");
}

TEST_CASE("dimension cap violations surface as validation errors") {
    auto result = run_cli({"volume", "slice", "--weights",
                           "1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1",
                           "--level", "15"});
    CHECK(result.exit_code == 2);
    CHECK(result.payload.at("error").at("code") == "dimension_cap");
}

TEST_CASE("malformed polynomial JSON is rejected") {
    CHECK_THROWS_AS(poly_from_json(nlohmann::json::parse(R"({"terms":[]})")), parse_error);
    CHECK_THROWS_AS(rational_from_json(nlohmann::json(1.5)), parse_error);
}

TEST_CASE("json round trips") {
    Rational q = parse_rational("-22/7");
    CHECK(rational_from_json(rational_to_json(q)) == q);

    MultiPoly p = MultiPoly::monomial(3, {1, 0, 2}, Rational(5, 3)) +
                  MultiPoly::constant(3, Rational(-2));
    CHECK(poly_from_json(poly_to_json(p)).terms() == p.terms());

    UniformSumDistribution d({Rational(1), Rational(-2)}, {Rational(0), Rational(-1)},
                             {Rational(1), Rational(1)});
    UniformSumDistribution back = distribution_from_json(distribution_to_json(d));
    CHECK(back.coefficients() == d.coefficients());
    CHECK(back.lowers() == d.lowers());
    CHECK(back.uppers() == d.uppers());
}
