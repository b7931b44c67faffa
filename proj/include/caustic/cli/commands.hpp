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

#include <cstdint>
#include <filesystem>
#include <ostream>
#include <string>
#include <vector>

#include "caustic/cli/config.hpp"
#include "caustic/evaluation.hpp"
#include "caustic/validation.hpp"

namespace caustic::cli {

/// 17 significant digits with a '.' decimal point, independent of the locale.
std::string format_number(double v);

/// 16-bit binary PGM (P5, maxval 65535, big-endian samples). Row 0 of the
/// image is the largest y; pixel = round(65535 * clamp((dB + 60) / 60, 0, 1)).
void write_pgm(std::ostream &out, const FieldMap &map);

/// Linear normalized power, one line per y (ascending), nx comma-separated columns.
void write_field_csv(std::ostream &out, const FieldMap &map);

std::uint16_t pgm_level(double normalized_power);

struct SweepSpec {
    double p_min_dbm = 10.0;
    double p_max_dbm = 30.0;
    int steps = 5;
    std::vector<Scheme> schemes;
};

struct SweepRow {
    double p_dbm = 0.0;
    Scheme scheme = Scheme::Proposed;
    RobustReport report;
};

struct TimingRow {
    Scheme scheme = Scheme::Proposed;
    int num_elements = 0;
    int repeats = 0;
    double mean_seconds = 0.0;
    double min_seconds = 0.0;
    double growth_vs_m64 = 0.0; // mean(M) / mean(64); 0 when not measured
};

// Each command writes its artifacts plus config.resolved.json into `out`
// (created if missing).
void cmd_profile(const ScenarioConfig &cfg, const std::filesystem::path &out);
FieldMap cmd_field(const ScenarioConfig &cfg, const std::filesystem::path &out);
std::vector<SweepRow> cmd_sweep(const ScenarioConfig &cfg, const std::filesystem::path &out, const SweepSpec &sweep);
ValidationReport cmd_validate(const ScenarioConfig &cfg, const std::filesystem::path &out);
std::vector<TimingRow> cmd_bench(const ScenarioConfig &cfg, const std::filesystem::path &out, int repeats,
                                 std::vector<Scheme> schemes);

} // namespace caustic::cli
