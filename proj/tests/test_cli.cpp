// SPDX-License-Identifier: Apache-2.0
//
// caustic-beam: near-field caustic beam synthesis and secrecy evaluation
// Copyright (C) 2026 The caustic-beam authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------


#include <doctest.h>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>

#include "caustic/cli/commands.hpp"
#include "caustic/cli/config.hpp"

using namespace caustic;
using namespace caustic::cli;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string &name)
{
    const fs::path p = fs::temp_directory_path() / ("caustic_cli_test_" + name);
    fs::remove_all(p);
    return p;
}

std::string slurp(const fs::path &p)
{
    std::ifstream in(p, std::ios::binary);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
}

ScenarioConfig small_config()
{
    ScenarioConfig c;
    c.num_elements = 64;
    c.grid = {0.0, 1.0, 0.5, 1.5, 11, 9};
    c.sampling = {2, 8, true};
    return c;
}

std::string field_of(const ConfigError &e) { return e.field(); }

} // namespace

TEST_CASE("defaults reproduce the reference scenario")
{
    const ScenarioConfig c = parse_config(json::object());
    const Scenario s = to_scenario(c);
    const Scenario r = reference_scenario();
    CHECK(s.array.element_x == r.array.element_x);
    CHECK(s.ue == r.ue);
    CHECK(s.eavesdropper.center == r.eavesdropper.center);
    CHECK(s.eavesdropper.radius == r.eavesdropper.radius);
    CHECK(s.budget.snr_scale() == doctest::Approx(r.budget.snr_scale()));
    CHECK(c.scheme == Scheme::Proposed);
}

TEST_CASE("resolved config round-trips")
{
    ScenarioConfig c = small_config();
    c.scheme = Scheme::Quadratic;
    c.options.quadratic_a = 0.7;
    c.options.steering_angle = 1.1;
    c.epsilon_margin_m = 0.02;
    const json j = to_json(c);
    CHECK(j.at("element_spacing").is_number());
    const ScenarioConfig d = parse_config(j);
    CHECK(to_json(d) == j);
    CHECK(d.scheme == Scheme::Quadratic);
    CHECK(*d.options.steering_angle == 1.1);
}

TEST_CASE("element spacing forms")
{
    CHECK_FALSE(parse_config(json{{"element_spacing", "half-wavelength"}}).element_spacing_m.has_value());
    CHECK(*parse_config(json{{"element_spacing", 0.004}}).element_spacing_m == 0.004);
    CHECK_THROWS_AS(parse_config(json{{"element_spacing", "quarter"}}), ConfigError);
    CHECK_THROWS_AS(parse_config(json{{"element_spacing", -1.0}}), ConfigError);
}

TEST_CASE("config errors name the offending field")
{
    const std::pair<json, std::string> cases[] = {
        {json{{"bogus", 1}}, "bogus"},
        {json{{"grid", {{"nz", 3}}}}, "grid.nz"},
        {json{{"num_elements", 1}}, "num_elements"},
        {json{{"num_elements", 2.5}}, "num_elements"},
        {json{{"ue_position", {1.0}}}, "ue_position"},
        {json{{"ue_position", {1.0, -1.0}}}, "ue_position"},
        {json{{"epsilon_m", 2.0}}, "epsilon_m"},
        {json{{"epsilon_margin_m", -0.1}}, "epsilon_margin_m"},
        {json{{"sampling", {{"angles", 2}}}}, "sampling.angles"},
        {json{{"grid", {{"x_min", 3.0}}}}, "grid.x_max"},
        {json{{"scheme", "laser"}}, "scheme"},
        {json{{"steering_angle_rad", 4.0}}, "steering_angle_rad"},
        {json{{"quadratic_a", 0.0}}, "quadratic_a"},
        {json{{"carrier_frequency_hz", "28e9"}}, "carrier_frequency_hz"},
    };
    for (const auto &[j, field] : cases) {
        CAPTURE(j.dump());
        try {
            parse_config(j);
            FAIL("accepted");
        } catch (const ConfigError &e) {
            CHECK(field_of(e) == field);
        }
    }
}

TEST_CASE("file loading and overrides")
{
    const fs::path dir = scratch("load");
    fs::create_directories(dir);
    {
        std::ofstream(dir / "ok.json") << R"({"num_elements": 32, "grid": {"nx": 5}})";
        std::ofstream(dir / "bad.json") << "{\n  \"num_elements\": 32,\n  oops\n}";
    }
    const ScenarioConfig c = load_config(dir / "ok.json", {"grid.ny=7", "scheme=focusing", "ue_position=[0.5, 2]"});
    CHECK(c.num_elements == 32);
    CHECK(c.grid.nx == 5);
    CHECK(c.grid.ny == 7);
    CHECK(c.scheme == Scheme::Focusing);
    CHECK(c.ue_position == Point2{0.5, 2.0});

    try {
        load_config(dir / "bad.json", {});
        FAIL("malformed file accepted");
    } catch (const ConfigError &e) {
        CHECK(e.field() == "<parse>");
        CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    }
    CHECK_THROWS_AS(load_config(dir / "missing.json", {}), ConfigError);
    CHECK_THROWS_AS(load_config(std::nullopt, {"noequals"}), ConfigError);
    CHECK_THROWS_AS(load_config(std::nullopt, {"num_elements.x=3"}), ConfigError);
    fs::remove_all(dir);
}

TEST_CASE("number formatting round-trips")
{
    for (double v : {0.1, -586.8366061464709, 1e-300, 12345678.9, 0.0}) {
        const std::string s = format_number(v);
        double back = 1.0;
        std::from_chars(s.data(), s.data() + s.size(), back);
        CHECK(back == v);
    }
    CHECK(format_number(0.5) == "0.5");
}

TEST_CASE("pgm levels")
{
    CHECK(pgm_level(1.0) == 65535);
    CHECK(pgm_level(1e-6) == 0);
    CHECK(pgm_level(1e-9) == 0);
    CHECK(pgm_level(0.0) == 0);
    CHECK(pgm_level(1e-3) == 32768); // -30 dB sits at the midpoint, 32767.5 rounds up
    CHECK(pgm_level(2.0) == 65535);

    FieldMap m;
    m.grid = {0.0, 1.0, 0.0, 1.0, 2, 2};
    m.values = {1.0, 0.0, 1e-3, 1.0}; // bottom row then top row
    m.masked.assign(4, 0);
    std::ostringstream out;
    write_pgm(out, m);
    const std::string s = out.str();
    const std::string header = "P5\n2 2\n65535\n";
    REQUIRE(s.size() == header.size() + 8);
    CHECK(s.substr(0, header.size()) == header);
    const auto byte = [&](std::size_t k) { return static_cast<unsigned char>(s[header.size() + k]); };
    // Top row first: (1e-3, 1.0), then the bottom row (1.0, 0.0).
    CHECK(byte(0) == 0x80);
    CHECK(byte(1) == 0x00);
    CHECK(byte(2) == 0xff);
    CHECK(byte(3) == 0xff);
    CHECK(byte(4) == 0xff);
    CHECK(byte(6) == 0x00);
    CHECK(byte(7) == 0x00);
}

TEST_CASE("profile command output")
{
    const fs::path dir = scratch("profile");
    ScenarioConfig c = small_config();
    cmd_profile(c, dir);
    std::ifstream in(dir / "profile.csv");
    std::string line;
    std::getline(in, line);
    CHECK(line == "element_index,x_m,phase_rad_unwrapped,phase_rad_wrapped,label");
    int rows = 0;
    bool saw_caustic = false;
    while (std::getline(in, line)) {
        ++rows;
        saw_caustic = saw_caustic || line.ends_with(",CAUSTIC");
    }
    CHECK(rows == 64);
    CHECK(saw_caustic);
    CHECK(fs::exists(dir / "config.resolved.json"));
    CHECK(parse_config(json::parse(slurp(dir / "config.resolved.json"))).num_elements == 64);

    c.scheme = Scheme::Eigen;
    CHECK_THROWS_AS(cmd_profile(c, dir), ConfigError);
    fs::remove_all(dir);
}

TEST_CASE("profile command examples")
{
    const fs::path dir = scratch("profile_examples");
    ScenarioConfig c;
    c.scheme = Scheme::Steering;
    c.options.steering_angle = std::numbers::pi / 2;
    cmd_profile(c, dir / "steer");
    std::ifstream steer(dir / "steer" / "profile.csv");
    std::string line;
    std::getline(steer, line);
    int rows = 0;
    while (std::getline(steer, line)) {
        ++rows;
        std::stringstream ss(line);
        std::string cell;
        for (int k = 0; k < 3; ++k) {
            std::getline(ss, cell, ',');
        }
        CHECK(std::abs(std::stod(cell)) < 1e-12);
    }
    CHECK(rows == 256);

    c.scheme = Scheme::Proposed;
    cmd_profile(c, dir / "proposed");
    std::ifstream prop(dir / "proposed" / "profile.csv");
    std::getline(prop, line);
    std::string labels;
    while (std::getline(prop, line)) {
        labels += line.ends_with(",CAUSTIC") ? 'C' : 'F';
    }
    // One contiguous caustic run starting at the -x end.
    REQUIRE(labels.size() == 256);
    CHECK(labels.front() == 'C');
    CHECK(labels.find('F') != std::string::npos);
    CHECK(labels.find('C', labels.find('F')) == std::string::npos);
    fs::remove_all(dir);
}

TEST_CASE("sweep rows are internally consistent")
{
    ScenarioConfig c = small_config();
    const fs::path dir = scratch("sweep_rows");
    const auto rows = cmd_sweep(c, dir, SweepSpec{10.0, 30.0, 5, {Scheme::Steering, Scheme::Focusing, Scheme::Proposed}});
    CHECK(rows.size() == 15);
    for (const SweepRow &r : rows) {
        CHECK(r.report.r_s_worst == std::max(0.0, r.report.r_ue - r.report.r_e_worst));
    }
    fs::remove_all(dir);
}

TEST_CASE("field and sweep commands are deterministic")
{
    const ScenarioConfig c = small_config();
    const fs::path a = scratch("det_a");
    const fs::path b = scratch("det_b");
    const SweepSpec sw{10.0, 30.0, 3, {Scheme::Proposed, Scheme::Eigen}};
    const FieldMap m = cmd_field(c, a);
    cmd_field(c, b);
    const auto rows = cmd_sweep(c, a, sw);
    cmd_sweep(c, b, sw);
    for (const char *f : {"field.csv", "field.pgm", "report.csv"}) {
        CHECK(slurp(a / f) == slurp(b / f));
    }
    CHECK(m.values.size() == 99);
    REQUIRE(rows.size() == 6);
    CHECK(rows[0].p_dbm == 10.0);
    CHECK(rows[1].scheme == Scheme::Eigen);
    CHECK(rows[5].p_dbm == 30.0);
    CHECK(slurp(a / "report.csv").starts_with("p_dbm,scheme,r_ue,r_e_mean,r_e_worst,r_s_mean,r_s_worst\n"));
    CHECK_THROWS_AS(cmd_sweep(c, a, SweepSpec{30.0, 10.0, 3, {}}), ConfigError);
    fs::remove_all(a);
    fs::remove_all(b);
}

TEST_CASE("validate command summary")
{
    const fs::path dir = scratch("validate");
    const ValidationReport r = cmd_validate(small_config(), dir);
    CHECK(r.pass);
    const std::string text = slurp(dir / "validate.csv");
    CHECK(text.starts_with("element_index,x_m,label,direction_cosine,angle_rad,check,residual,tolerance,pass\n"));
    CHECK(text.find("\nsummary,") != std::string::npos);
    fs::remove_all(dir);
}

TEST_CASE("bench growth ratios")
{
    const fs::path dir = scratch("bench");
    ScenarioConfig c;
    const auto rows = cmd_bench(c, dir, 20, {Scheme::Proposed, Scheme::Eigen});
    REQUIRE(rows.size() == 4);
    for (const TimingRow &r : rows) {
        CHECK(r.mean_seconds > 0.0);
        CHECK(r.min_seconds <= r.mean_seconds);
        if (r.num_elements == 64) {
            CHECK(r.growth_vs_m64 == 1.0);
        } else {
            CHECK(r.growth_vs_m64 > 1.0);
            CHECK(r.growth_vs_m64 <= (r.scheme == Scheme::Eigen ? 16.0 : 8.0));
        }
    }
    CHECK(fs::exists(dir / "timing.csv"));
    fs::remove_all(dir);
}
