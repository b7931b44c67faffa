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

#pragma once

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "caustic/beamformer.hpp"
#include "caustic/evaluation.hpp"
#include "caustic/scenario.hpp"
#include "caustic/synthesis.hpp"

namespace caustic::cli {

/// Bad config text or values. `field` names the offending key (dotted path)
/// or is "<parse>" for syntax errors, in which case the message carries line and column.
class ConfigError : public std::runtime_error {
public:
    ConfigError(std::string field, const std::string &msg)
        : std::runtime_error(field + ": " + msg), field_(std::move(field))
    {
    }
    const std::string &field() const noexcept { return field_; }

private:
    std::string field_;
};

struct ScenarioConfig {
    double carrier_frequency_hz = 28e9;
    int num_elements = 256;
    std::optional<double> element_spacing_m; // empty = half wavelength
    Point2 ue_position{1.5, 3.0};
    Point2 eavesdropper_estimate{0.4, 1.25};
    double epsilon_m = 0.25;
    double epsilon_margin_m = 0.0;
    double transmit_power_dbm = 20.0;
    double noise_power_dbm = -50.0;
    RegionSampling sampling;
    GridSpec grid;
    Scheme scheme = Scheme::Proposed;
    SchemeOptions options;
};

/// Parses and validates a config object; absent keys keep their defaults and
/// unknown keys are rejected.
ScenarioConfig parse_config(const nlohmann::json &j);

/// Reads a config file (or starts from defaults when `path` is empty) and
/// applies `key=value` overrides in order. Dotted keys address nested objects;
/// values are read as JSON and fall back to plain strings.
ScenarioConfig load_config(const std::optional<std::filesystem::path> &path, const std::vector<std::string> &overrides);

/// Fully resolved config (numeric spacing, every key present); parse_config
/// of the result yields an equivalent scenario.
nlohmann::json to_json(const ScenarioConfig &cfg);

Scenario to_scenario(const ScenarioConfig &cfg);

} // namespace caustic::cli
