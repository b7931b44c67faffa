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

#include "caustic/cli/commands.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <fstream>
#include <limits>
#include <numbers>

#include "caustic/errors.hpp"
#include "caustic/profiles.hpp"
#include "caustic/synthesis.hpp"

namespace caustic::cli {

namespace fs = std::filesystem;

namespace {

std::ofstream open_output(const fs::path &dir, const std::string &name)
{
    fs::create_directories(dir);
    std::ofstream out(dir / name, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw std::runtime_error("cannot write " + (dir / name).string());
    }
    return out;
}

void write_resolved_config(const ScenarioConfig &cfg, const fs::path &dir)
{
    auto out = open_output(dir, "config.resolved.json");
    out << to_json(cfg).dump(2) << '\n';
}

std::string_view label_name(ElementLabel l) { return l == ElementLabel::Caustic ? "CAUSTIC" : "FOCUSING"; }

std::string_view check_name(CheckKind k)
{
    switch (k) {
    case CheckKind::AngleDeviation: return "angle_deviation";
    case CheckKind::FocusMiss: return "focus_miss";
    case CheckKind::DiskTangency: return "disk_tangency";
    case CheckKind::ParabolaTangency: return "parabola_tangency";
    case CheckKind::None: return "none";
    }
    return "none";
}

} // namespace

std::string format_number(double v)
{
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 17);
    return {buf, res.ptr};
}

std::uint16_t pgm_level(double normalized_power)
{
    if (!(normalized_power > 0.0)) {
        return 0;
    }
    const double db = 10.0 * std::log10(normalized_power);
    const double t = std::clamp((db + 60.0) / 60.0, 0.0, 1.0);
    return static_cast<std::uint16_t>(std::lround(65535.0 * t));
}

void write_pgm(std::ostream &out, const FieldMap &map)
{
    const int nx = map.grid.nx;
    const int ny = map.grid.ny;
    out << "P5\n" << nx << ' ' << ny << "\n65535\n";
    std::vector<char> row(static_cast<std::size_t>(nx) * 2);
    for (int r = 0; r < ny; ++r) {
        const int j = ny - 1 - r;
        for (int i = 0; i < nx; ++i) {
            const std::uint16_t v = pgm_level(map.at(i, j));
            row[2 * static_cast<std::size_t>(i)] = static_cast<char>(v >> 8);
            row[2 * static_cast<std::size_t>(i) + 1] = static_cast<char>(v & 0xff);
        }
        out.write(row.data(), static_cast<std::streamsize>(row.size()));
    }
}

void write_field_csv(std::ostream &out, const FieldMap &map)
{
    for (int j = 0; j < map.grid.ny; ++j) {
        for (int i = 0; i < map.grid.nx; ++i) {
            if (i) {
                out << ',';
            }
            out << format_number(map.at(i, j));
        }
        out << '\n';
    }
}

void cmd_profile(const ScenarioConfig &cfg, const fs::path &out)
{
    if (cfg.scheme == Scheme::Eigen) {
        throw ConfigError("scheme", "the eigen benchmark is not a phase profile; use field or sweep");
    }
    const Scenario s = to_scenario(cfg);
    const PhaseProfile p = *synthesize_profile(cfg.scheme, s, cfg.options);
    auto csv = open_output(out, "profile.csv");
    csv << "element_index,x_m,phase_rad_unwrapped,phase_rad_wrapped,label\n";
    for (std::size_t m = 0; m < p.size(); ++m) {
        csv << m << ',' << format_number(s.array.element_x[m]) << ',' << format_number(p.phases[m]) << ','
            << format_number(std::remainder(p.phases[m], 2.0 * std::numbers::pi)) << ',' << label_name(p.labels[m])
            << '\n';
    }
    write_resolved_config(cfg, out);
}

FieldMap cmd_field(const ScenarioConfig &cfg, const fs::path &out)
{
    const Scenario s = to_scenario(cfg);
    const FieldMap map = field_map(synthesize(cfg.scheme, s, cfg.options), s, cfg.grid);
    {
        auto csv = open_output(out, "field.csv");
        write_field_csv(csv, map);
    }
    {
        auto pgm = open_output(out, "field.pgm");
        write_pgm(pgm, map);
    }
    write_resolved_config(cfg, out);
    return map;
}

std::vector<SweepRow> cmd_sweep(const ScenarioConfig &cfg, const fs::path &out, const SweepSpec &sweep)
{
    if (!(sweep.p_min_dbm < sweep.p_max_dbm)) {
        throw ConfigError("--p-min", "must be below --p-max");
    }
    if (sweep.steps < 2) {
        throw ConfigError("--steps", "must be at least 2");
    }
    std::vector<Scheme> schemes = sweep.schemes;
    if (schemes.empty()) {
        schemes.push_back(cfg.scheme);
    }

    std::vector<SweepRow> rows;
    for (int i = 0; i < sweep.steps; ++i) {
        const double p = i == sweep.steps - 1
                             ? sweep.p_max_dbm
                             : sweep.p_min_dbm + (sweep.p_max_dbm - sweep.p_min_dbm) * i / (sweep.steps - 1);
        ScenarioConfig at = cfg;
        at.transmit_power_dbm = p;
        const Scenario s = to_scenario(at);
        for (Scheme scheme : schemes) {
            rows.push_back({p, scheme, robust_report(synthesize(scheme, s, cfg.options), s, cfg.sampling)});
        }
    }

    auto csv = open_output(out, "report.csv");
    csv << "p_dbm,scheme,r_ue,r_e_mean,r_e_worst,r_s_mean,r_s_worst\n";
    for (const auto &r : rows) {
        csv << format_number(r.p_dbm) << ',' << to_string(r.scheme) << ',' << format_number(r.report.r_ue) << ','
            << format_number(r.report.r_e_mean) << ',' << format_number(r.report.r_e_worst) << ','
            << format_number(r.report.r_s_mean) << ',' << format_number(r.report.r_s_worst) << '\n';
    }
    write_resolved_config(cfg, out);
    return rows;
}

ValidationReport cmd_validate(const ScenarioConfig &cfg, const fs::path &out)
{
    if (cfg.scheme == Scheme::Eigen) {
        throw ConfigError("scheme", "the eigen benchmark is not a phase profile; nothing to validate");
    }
    const Scenario s = to_scenario(cfg);
    const PhaseProfile p = *synthesize_profile(cfg.scheme, s, cfg.options);
    const ValidationReport rep = validate_profile(p, cfg.scheme, s, cfg.options);

    auto csv = open_output(out, "validate.csv");
    csv << "element_index,x_m,label,direction_cosine,angle_rad,check,residual,tolerance,pass\n";
    for (const auto &e : rep.elements) {
        csv << e.index << ',' << format_number(e.x) << ',' << label_name(e.label) << ','
            << format_number(e.direction_cosine) << ',' << format_number(e.angle) << ',' << check_name(e.kind) << ','
            << format_number(e.residual) << ',' << format_number(e.tolerance) << ',' << (e.pass ? 1 : 0) << '\n';
    }
    // Summary row: direction_cosine holds max |cos|, then one max per residual kind.
    csv << "summary,,," << format_number(rep.max_abs_cosine) << ",,"
        << "angle_deviation=" << format_number(rep.max_angle_deviation)
        << ";focus_miss=" << format_number(rep.max_focus_miss)
        << ";disk_tangency=" << format_number(rep.max_tangency_residual)
        << ";parabola_tangency=" << format_number(rep.max_parabola_residual) << ",,," << (rep.pass ? 1 : 0) << '\n';
    write_resolved_config(cfg, out);
    return rep;
}

std::vector<TimingRow> cmd_bench(const ScenarioConfig &cfg, const fs::path &out, int repeats,
                                 std::vector<Scheme> schemes)
{
    if (repeats < 1) {
        throw ConfigError("--repeats", "must be at least 1");
    }
    if (schemes.empty()) {
        schemes = {Scheme::Steering, Scheme::Focusing, Scheme::Quadratic,
                   Scheme::Caustic,  Scheme::Proposed, Scheme::Eigen};
    }
    std::vector<int> sizes{64, 256};
    if (std::find(sizes.begin(), sizes.end(), cfg.num_elements) == sizes.end()) {
        sizes.push_back(cfg.num_elements);
    }

    using clock = std::chrono::steady_clock;
    std::vector<TimingRow> rows;
    for (Scheme scheme : schemes) {
        double mean64 = 0.0;
        for (int m : sizes) {
            ScenarioConfig at = cfg;
            at.num_elements = m;
            const Scenario s = to_scenario(at);
            TimingRow row{scheme, m, repeats, 0.0, std::numeric_limits<double>::infinity(), 0.0};
            double total = 0.0;
            std::size_t sink = 0;
            for (int r = 0; r < repeats; ++r) {
                const auto t0 = clock::now();
                const Beamformer bf = synthesize(scheme, s, cfg.options);
                const auto t1 = clock::now();
                sink += bf.size();
                const double dt = std::chrono::duration<double>(t1 - t0).count();
                total += dt;
                row.min_seconds = std::min(row.min_seconds, dt);
            }
            if (sink == 0) {
                throw Error(Errc::InvalidArgument, "empty beamformer");
            }
            row.mean_seconds = total / repeats;
            if (m == 64) {
                mean64 = row.mean_seconds;
                row.growth_vs_m64 = 1.0;
            } else if (mean64 > 0.0) {
                row.growth_vs_m64 = row.mean_seconds / mean64;
            }
            rows.push_back(row);
        }
    }

    auto csv = open_output(out, "timing.csv");
    csv << "scheme,num_elements,repeats,mean_s,min_s,growth_vs_m64\n";
    for (const auto &r : rows) {
        csv << to_string(r.scheme) << ',' << r.num_elements << ',' << r.repeats << ',' << format_number(r.mean_seconds)
            << ',' << format_number(r.min_seconds) << ',' << (r.growth_vs_m64 > 0.0 ? format_number(r.growth_vs_m64) : "")
            << '\n';
    }
    write_resolved_config(cfg, out);
    return rows;
}

} // namespace caustic::cli
