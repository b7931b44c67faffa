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

#include "caustic/cli/config.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <set>
#include <sstream>

#include "caustic/errors.hpp"

namespace caustic::cli {

using nlohmann::json;

namespace {

void reject_unknown(const json &obj, const std::string &prefix, const std::set<std::string> &known)
{
    for (const auto &[key, value] : obj.items()) {
        if (!known.contains(key)) {
            throw ConfigError(prefix + key, "unknown key");
        }
    }
}

double get_number(const json &obj, const std::string &key, const std::string &path, double fallback)
{
    if (!obj.contains(key)) {
        return fallback;
    }
    const json &v = obj.at(key);
    if (!v.is_number()) {
        throw ConfigError(path, "expected a number");
    }
    const double d = v.get<double>();
    if (!std::isfinite(d)) {
        throw ConfigError(path, "must be finite");
    }
    return d;
}

int get_int(const json &obj, const std::string &key, const std::string &path, int fallback)
{
    if (!obj.contains(key)) {
        return fallback;
    }
    const json &v = obj.at(key);
    if (!v.is_number_integer()) {
        throw ConfigError(path, "expected an integer");
    }
    return v.get<int>();
}

Point2 get_point(const json &obj, const std::string &key, Point2 fallback)
{
    if (!obj.contains(key)) {
        return fallback;
    }
    const json &v = obj.at(key);
    if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number()) {
        throw ConfigError(key, "expected [x, y] in meters");
    }
    return {v[0].get<double>(), v[1].get<double>()};
}

void require(bool ok, const std::string &field, const std::string &msg)
{
    if (!ok) {
        throw ConfigError(field, msg);
    }
}

std::string parse_error_location(const std::string &text, std::size_t byte)
{
    std::size_t line = 1;
    std::size_t col = 1;
    for (std::size_t i = 0; i < text.size() && i + 1 < byte; ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

void apply_override(json &root, const std::string &assignment)
{
    const auto eq = assignment.find('=');
    if (eq == std::string::npos || eq == 0) {
        throw ConfigError("--set", "expected key=value, got '" + assignment + "'");
    }
    const std::string key = assignment.substr(0, eq);
    const std::string text = assignment.substr(eq + 1);
    json value = json::parse(text, nullptr, false);
    if (value.is_discarded()) {
        value = text;
    }
    json *node = &root;
    std::size_t start = 0;
    while (true) {
        const auto dot = key.find('.', start);
        const std::string part = key.substr(start, dot - start);
        if (part.empty()) {
            throw ConfigError(key, "empty path component");
        }
        if (dot == std::string::npos) {
            (*node)[part] = value;
            return;
        }
        json &child = (*node)[part];
        if (child.is_null()) {
            child = json::object();
        }
        if (!child.is_object()) {
            throw ConfigError(key, "'" + part + "' is not an object");
        }
        node = &child;
        start = dot + 1;
    }
}

} // namespace

ScenarioConfig parse_config(const json &j)
{
    if (!j.is_object()) {
        throw ConfigError("<root>", "config must be an object");
    }
    reject_unknown(j, "",
                   {"carrier_frequency_hz", "num_elements", "element_spacing", "ue_position", "eavesdropper_estimate",
                    "epsilon_m", "epsilon_margin_m", "transmit_power_dbm", "noise_power_dbm", "sampling", "grid",
                    "scheme", "steering_angle_rad", "quadratic_a"});

    ScenarioConfig c;
    c.carrier_frequency_hz = get_number(j, "carrier_frequency_hz", "carrier_frequency_hz", c.carrier_frequency_hz);
    require(c.carrier_frequency_hz > 0.0, "carrier_frequency_hz", "must be positive");
    c.num_elements = get_int(j, "num_elements", "num_elements", c.num_elements);
    require(c.num_elements >= 2, "num_elements", "must be at least 2");

    if (j.contains("element_spacing")) {
        const json &v = j.at("element_spacing");
        if (v.is_string()) {
            require(v.get<std::string>() == "half-wavelength", "element_spacing",
                    "expected meters or \"half-wavelength\"");
        } else {
            c.element_spacing_m = get_number(j, "element_spacing", "element_spacing", 0.0);
            require(*c.element_spacing_m > 0.0, "element_spacing", "must be positive");
        }
    }

    c.ue_position = get_point(j, "ue_position", c.ue_position);
    require(c.ue_position.y > 0.0, "ue_position", "y must be positive");
    c.eavesdropper_estimate = get_point(j, "eavesdropper_estimate", c.eavesdropper_estimate);
    require(c.eavesdropper_estimate.y > 0.0, "eavesdropper_estimate", "y must be positive");
    c.epsilon_m = get_number(j, "epsilon_m", "epsilon_m", c.epsilon_m);
    require(c.epsilon_m > 0.0, "epsilon_m", "must be positive");
    require(c.eavesdropper_estimate.y > c.epsilon_m, "epsilon_m", "disk must stay above the array (y_E > epsilon)");
    c.epsilon_margin_m = get_number(j, "epsilon_margin_m", "epsilon_margin_m", c.epsilon_margin_m);
    require(c.epsilon_margin_m >= 0.0, "epsilon_margin_m", "must be non-negative");
    c.transmit_power_dbm = get_number(j, "transmit_power_dbm", "transmit_power_dbm", c.transmit_power_dbm);
    c.noise_power_dbm = get_number(j, "noise_power_dbm", "noise_power_dbm", c.noise_power_dbm);

    if (j.contains("sampling")) {
        const json &s = j.at("sampling");
        require(s.is_object(), "sampling", "expected an object");
        reject_unknown(s, "sampling.", {"rings", "angles", "include_center"});
        c.sampling.rings = get_int(s, "rings", "sampling.rings", c.sampling.rings);
        c.sampling.angles_per_ring = get_int(s, "angles", "sampling.angles", c.sampling.angles_per_ring);
        if (s.contains("include_center")) {
            require(s.at("include_center").is_boolean(), "sampling.include_center", "expected true or false");
            c.sampling.include_center = s.at("include_center").get<bool>();
        }
    }
    require(c.sampling.rings >= 1, "sampling.rings", "must be at least 1");
    require(c.sampling.angles_per_ring >= 4, "sampling.angles", "must be at least 4");

    if (j.contains("grid")) {
        const json &g = j.at("grid");
        require(g.is_object(), "grid", "expected an object");
        reject_unknown(g, "grid.", {"x_min", "x_max", "y_min", "y_max", "nx", "ny"});
        c.grid.x_min = get_number(g, "x_min", "grid.x_min", c.grid.x_min);
        c.grid.x_max = get_number(g, "x_max", "grid.x_max", c.grid.x_max);
        c.grid.y_min = get_number(g, "y_min", "grid.y_min", c.grid.y_min);
        c.grid.y_max = get_number(g, "y_max", "grid.y_max", c.grid.y_max);
        c.grid.nx = get_int(g, "nx", "grid.nx", c.grid.nx);
        c.grid.ny = get_int(g, "ny", "grid.ny", c.grid.ny);
    }
    require(c.grid.nx >= 2, "grid.nx", "must be at least 2");
    require(c.grid.ny >= 2, "grid.ny", "must be at least 2");
    require(c.grid.x_max > c.grid.x_min, "grid.x_max", "must exceed grid.x_min");
    require(c.grid.y_max > c.grid.y_min, "grid.y_max", "must exceed grid.y_min");

    if (j.contains("scheme")) {
        const json &v = j.at("scheme");
        require(v.is_string(), "scheme", "expected a string");
        const auto s = parse_scheme(v.get<std::string>());
        require(s.has_value(), "scheme", "unknown scheme '" + v.get<std::string>() + "'");
        c.scheme = *s;
    }
    if (j.contains("steering_angle_rad")) {
        c.options.steering_angle = get_number(j, "steering_angle_rad", "steering_angle_rad", 0.0);
        require(*c.options.steering_angle > 0.0 && *c.options.steering_angle < std::numbers::pi,
                "steering_angle_rad", "must lie in (0, pi)");
    }
    c.options.quadratic_a = get_number(j, "quadratic_a", "quadratic_a", c.options.quadratic_a);
    require(c.options.quadratic_a != 0.0, "quadratic_a", "must be nonzero");
    return c;
}

ScenarioConfig load_config(const std::optional<std::filesystem::path> &path, const std::vector<std::string> &overrides)
{
    json root = json::object();
    if (path) {
        std::ifstream in(*path, std::ios::binary);
        if (!in) {
            throw ConfigError("--config", "cannot open '" + path->string() + "'");
        }
        std::stringstream buf;
        buf << in.rdbuf();
        const std::string text = buf.str();
        try {
            root = json::parse(text);
        } catch (const json::parse_error &e) {
            throw ConfigError("<parse>", path->string() + ": " + parse_error_location(text, e.byte) + ": " +
                                             "malformed config");
        }
    }
    for (const auto &o : overrides) {
        apply_override(root, o);
    }
    try {
        return parse_config(root);
    } catch (const json::exception &e) {
        throw ConfigError("<root>", e.what());
    }
}

json to_json(const ScenarioConfig &c)
{
    const double spacing = c.element_spacing_m ? *c.element_spacing_m
                                               : 0.5 * WaveSpec::from_frequency(c.carrier_frequency_hz).wavelength;
    json j = {
        {"carrier_frequency_hz", c.carrier_frequency_hz},
        {"num_elements", c.num_elements},
        {"element_spacing", spacing},
        {"ue_position", {c.ue_position.x, c.ue_position.y}},
        {"eavesdropper_estimate", {c.eavesdropper_estimate.x, c.eavesdropper_estimate.y}},
        {"epsilon_m", c.epsilon_m},
        {"epsilon_margin_m", c.epsilon_margin_m},
        {"transmit_power_dbm", c.transmit_power_dbm},
        {"noise_power_dbm", c.noise_power_dbm},
        {"sampling",
         {{"rings", c.sampling.rings},
          {"angles", c.sampling.angles_per_ring},
          {"include_center", c.sampling.include_center}}},
        {"grid",
         {{"x_min", c.grid.x_min},
          {"x_max", c.grid.x_max},
          {"y_min", c.grid.y_min},
          {"y_max", c.grid.y_max},
          {"nx", c.grid.nx},
          {"ny", c.grid.ny}}},
        {"scheme", std::string(to_string(c.scheme))},
        {"quadratic_a", c.options.quadratic_a},
    };
    if (c.options.steering_angle) {
        j["steering_angle_rad"] = *c.options.steering_angle;
    }
    return j;
}

Scenario to_scenario(const ScenarioConfig &c)
{
    Scenario s;
    s.wave = WaveSpec::from_frequency(c.carrier_frequency_hz);
    s.array = ArrayGeometry::uniform(c.num_elements, c.element_spacing_m ? *c.element_spacing_m
                                                                         : 0.5 * s.wave.wavelength);
    s.ue = c.ue_position;
    s.eavesdropper = {c.eavesdropper_estimate, c.epsilon_m};
    s.epsilon_margin = c.epsilon_margin_m;
    s.budget = LinkBudget::from_dbm(c.transmit_power_dbm, c.noise_power_dbm);
    return s;
}

} // namespace caustic::cli
