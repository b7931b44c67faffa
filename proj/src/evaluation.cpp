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

#include "caustic/evaluation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>

#include "caustic/errors.hpp"

namespace caustic {

std::vector<Point2> sample_region(const Disk &disk, const RegionSampling &sampling)
{
    if (sampling.rings < 1 || sampling.angles_per_ring < 1) {
        throw Error(Errc::InvalidArgument, "region sampling needs at least one ring and one angle");
    }
    std::vector<Point2> pts;
    pts.reserve(sampling.sample_count());
    for (int k = 1; k <= sampling.rings; ++k) {
        // k == rings gives radius exactly eps.
        const double r = k == sampling.rings ? disk.radius : disk.radius * k / sampling.rings;
        for (int j = 0; j < sampling.angles_per_ring; ++j) {
            const double a = 2.0 * std::numbers::pi * j / sampling.angles_per_ring;
            pts.push_back(disk.center + r * Point2{std::cos(a), std::sin(a)});
        }
    }
    if (sampling.include_center) {
        pts.push_back(disk.center);
    }
    return pts;
}

RobustReport robust_report(const Beamformer &f, const Scenario &s, const RegionSampling &sampling)
{
    const auto samples = sample_region(s.eavesdropper, sampling);
    return robust_report(f, s, samples);
}

RobustReport robust_report(const Beamformer &f, const Scenario &s, std::span<const Point2> samples)
{
    if (samples.empty()) {
        throw Error(Errc::EmptyRegion, "no eavesdropper samples");
    }
    RobustReport rep;
    rep.r_ue = rate(std::norm(received_amplitude(f.weights, s.array, s.ue, s.wave)), s.budget);

    std::vector<double> r_e(samples.size());
    for (std::size_t i = 0; i < samples.size(); ++i) {
        r_e[i] = rate(std::norm(received_amplitude(f.weights, s.array, samples[i], s.wave)), s.budget);
    }
    const auto worst = std::max_element(r_e.begin(), r_e.end()); // first on ties
    rep.r_e_worst = *worst;
    rep.worst_point = samples[static_cast<std::size_t>(worst - r_e.begin())];
    rep.r_e_mean = std::accumulate(r_e.begin(), r_e.end(), 0.0) / static_cast<double>(r_e.size());

    double rs_sum = 0.0;
    for (double v : r_e) {
        rs_sum += secrecy_rate(rep.r_ue, v);
    }
    rep.r_s_mean = rs_sum / static_cast<double>(r_e.size());
    rep.r_s_worst = secrecy_rate(rep.r_ue, rep.r_e_worst);
    return rep;
}

FieldMap field_map(const Beamformer &f, const Scenario &s, const GridSpec &grid)
{
    if (grid.nx < 2 || grid.ny < 2) {
        throw Error(Errc::InvalidArgument, "field grid needs nx >= 2 and ny >= 2");
    }
    if (!(grid.x_max > grid.x_min) || !(grid.y_max > grid.y_min)) {
        throw Error(Errc::InvalidArgument, "field grid ranges must be increasing");
    }
    FieldMap map;
    map.grid = grid;
    const std::size_t n = static_cast<std::size_t>(grid.nx) * static_cast<std::size_t>(grid.ny);
    map.values.assign(n, 0.0);
    map.masked.assign(n, 0);

    constexpr double kElementGuard = 1e-6;
    for (int j = 0; j < grid.ny; ++j) {
        const double y = grid.y_at(j);
        for (int i = 0; i < grid.nx; ++i) {
            const Point2 p{grid.x_at(i), y};
            const std::size_t idx = static_cast<std::size_t>(j) * grid.nx + i;
            const bool near_element =
                std::abs(y) < kElementGuard &&
                std::any_of(s.array.element_x.begin(), s.array.element_x.end(),
                            [&](double ex) { return std::hypot(p.x - ex, y) < kElementGuard; });
            if (near_element) {
                map.masked[idx] = 1;
                continue;
            }
            map.values[idx] = std::norm(received_amplitude(f.weights, s.array, p, s.wave));
        }
    }
    map.peak_power = *std::max_element(map.values.begin(), map.values.end());
    if (map.peak_power > 0.0) {
        for (double &v : map.values) {
            v /= map.peak_power;
        }
    }
    return map;
}

RegionLeakage region_leakage(const FieldMap &map, const Disk &disk)
{
    constexpr double kNegInf = -std::numeric_limits<double>::infinity();
    std::size_t inside = 0;
    std::size_t counted = 0;
    double max_db = kNegInf;
    double sum_db = 0.0;
    for (int j = 0; j < map.grid.ny; ++j) {
        for (int i = 0; i < map.grid.nx; ++i) {
            if (!disk.contains({map.grid.x_at(i), map.grid.y_at(j)})) {
                continue;
            }
            ++inside;
            const double v = map.at(i, j);
            if (v > 0.0) {
                const double db = 10.0 * std::log10(v);
                max_db = std::max(max_db, db);
                sum_db += db;
                ++counted;
            }
        }
    }
    if (inside == 0) {
        throw Error(Errc::EmptyRegion, "no grid point lies inside the disk");
    }
    return {max_db, counted ? sum_db / static_cast<double>(counted) : kNegInf};
}

} // namespace caustic
