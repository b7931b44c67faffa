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

// causticbeam: command-line front end for profile synthesis, field maps,
// power sweeps, ray validation and timing.

#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "caustic/cli/commands.hpp"
#include "caustic/cli/config.hpp"
#include "caustic/errors.hpp"

namespace {

enum ExitCode { kOk = 0, kIoError = 1, kConfigError = 2, kGeometryError = 3, kNumericError = 4 };

struct CommonOptions {
    std::string config;
    std::string out = ".";
    std::vector<std::string> schemes;
    std::vector<std::string> overrides;
    long long seed = 0; // reserved: every computation is deterministic
};

void add_common(CLI::App *cmd, CommonOptions &o, bool multi_scheme)
{
    cmd->add_option("--config", o.config, "Scenario config file (JSON object)");
    cmd->add_option("--out", o.out, "Output directory")->capture_default_str();
    auto *scheme = cmd->add_option("--scheme", o.schemes,
                                   multi_scheme ? "Schemes, comma separated (steering, focusing, quadratic, caustic, "
                                                  "proposed, eigen)"
                                                : "Scheme, overriding the config");
    scheme->delimiter(',');
    if (!multi_scheme) {
        scheme->expected(1);
    }
    cmd->add_option("--set", o.overrides, "Config override key=value (repeatable, dotted keys for nesting)");
    cmd->add_option("--seed", o.seed, "Reserved; all outputs are deterministic");
}

std::vector<caustic::Scheme> parse_schemes(const std::vector<std::string> &names)
{
    std::vector<caustic::Scheme> out;
    for (const auto &n : names) {
        const auto s = caustic::parse_scheme(n);
        if (!s) {
            throw caustic::cli::ConfigError("--scheme", "unknown scheme '" + n + "'");
        }
        out.push_back(*s);
    }
    return out;
}

caustic::cli::ScenarioConfig resolve(const CommonOptions &o)
{
    std::optional<std::filesystem::path> path;
    if (!o.config.empty()) {
        path = o.config;
    }
    auto cfg = caustic::cli::load_config(path, o.overrides);
    const auto schemes = parse_schemes(o.schemes);
    if (!schemes.empty()) {
        cfg.scheme = schemes.front();
    }
    return cfg;
}

} // namespace

int main(int argc, char **argv)
{
    using namespace caustic;
    CLI::App app{"Near-field caustic beam synthesis and secrecy evaluation"};
    app.require_subcommand(1);

    CommonOptions opt;
    auto *profile = app.add_subcommand("profile", "Write the per-element phase profile (profile.csv)");
    add_common(profile, opt, false);

    auto *field = app.add_subcommand("field", "Render the normalized field map (field.csv, field.pgm)");
    add_common(field, opt, false);

    cli::SweepSpec sweep;
    auto *sweep_cmd = app.add_subcommand("sweep", "Robust rates versus transmit power (report.csv)");
    add_common(sweep_cmd, opt, true);
    sweep_cmd->add_option("--p-min", sweep.p_min_dbm, "Lowest transmit power, dBm")->capture_default_str();
    sweep_cmd->add_option("--p-max", sweep.p_max_dbm, "Highest transmit power, dBm")->capture_default_str();
    sweep_cmd->add_option("--steps", sweep.steps, "Number of power points")->capture_default_str();

    auto *validate = app.add_subcommand("validate", "Check implied ray geometry of the profile (validate.csv)");
    add_common(validate, opt, false);

    int repeats = 1000;
    auto *bench = app.add_subcommand("bench", "Time beamformer synthesis at M = 64 and 256 (timing.csv)");
    add_common(bench, opt, true);
    bench->add_option("--repeats", repeats, "Repetitions per measurement")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kConfigError;
    }

    try {
        const std::filesystem::path out = opt.out;
        if (profile->parsed()) {
            cli::cmd_profile(resolve(opt), out);
        } else if (field->parsed()) {
            cli::cmd_field(resolve(opt), out);
        } else if (sweep_cmd->parsed()) {
            CommonOptions base = opt;
            base.schemes.clear();
            sweep.schemes = parse_schemes(opt.schemes);
            cli::cmd_sweep(resolve(base), out, sweep);
        } else if (validate->parsed()) {
            const auto rep = cli::cmd_validate(resolve(opt), out);
            std::cout << "validation " << (rep.pass ? "passed" : "FAILED") << " over " << rep.elements.size()
                      << " interior elements\n";
        } else if (bench->parsed()) {
            CommonOptions base = opt;
            base.schemes.clear();
            const auto rows = cli::cmd_bench(resolve(base), out, repeats, parse_schemes(opt.schemes));
            for (const auto &r : rows) {
                std::cout << to_string(r.scheme) << " M=" << r.num_elements << " mean " << r.mean_seconds << " s";
                if (r.growth_vs_m64 > 0.0) {
                    std::cout << " (x" << r.growth_vs_m64 << " vs M=64)";
                }
                std::cout << '\n';
            }
        }
    } catch (const cli::ConfigError &e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kConfigError;
    } catch (const Error &e) {
        std::cerr << "error: " << e.what() << '\n';
        switch (e.code()) {
        case Errc::PointInsideDisk:
        case Errc::UnsupportedGeometry: return kGeometryError;
        case Errc::InvalidArgument: return kConfigError;
        default: return kNumericError;
        }
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kIoError;
    }
    return kOk;
}
