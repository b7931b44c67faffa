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
#include <vector>

#include "caustic/beamformer.hpp"
#include "caustic/scenario.hpp"

namespace caustic {

/// Polar sampling of the eavesdropping disk: ring k has radius eps*k/rings.
struct RegionSampling {
    int rings = 8;
    int angles_per_ring = 64;
    bool include_center = true;

    std::size_t sample_count() const
    {
        return static_cast<std::size_t>(rings) * static_cast<std::size_t>(angles_per_ring) + (include_center ? 1 : 0);
    }
};

/// Ring-major, angle-minor; the center (if requested) comes last.
std::vector<Point2> sample_region(const Disk &disk, const RegionSampling &sampling);

struct RobustReport {
    double r_ue = 0.0;
    double r_e_mean = 0.0;
    double r_e_worst = 0.0;
    double r_s_mean = 0.0;
    double r_s_worst = 0.0;
    Point2 worst_point;
};

/// Rates of the UE and of an eavesdropper anywhere on the sampled disk.
/// Mean values are plain averages over the samples (no area weighting).
/// worst_point is the first sample attaining the maximum eavesdropping rate.
RobustReport robust_report(const Beamformer &f, const Scenario &s, const RegionSampling &sampling);

/// Same, over an explicit sample list.
RobustReport robust_report(const Beamformer &f, const Scenario &s, std::span<const Point2> samples);

struct GridSpec {
    double x_min = -1.0;
    double x_max = 2.5;
    double y_min = 0.01;
    double y_max = 3.5;
    int nx = 351;
    int ny = 350;

    double x_at(int i) const { return x_min + (x_max - x_min) * i / (nx - 1); }
    double y_at(int j) const { return y_min + (y_max - y_min) * j / (ny - 1); }
};

/// Normalized received power |g|^2 / peak on a rectangular grid of points
/// (grid endpoints inclusive). Stored row-major with y ascending:
/// values[j * nx + i] belongs to (x_at(i), y_at(j)).
struct FieldMap {
    GridSpec grid;
    std::vector<double> values;
    std::vector<std::uint8_t> masked; // 1 where the point is within 1e-6 m of an element
    double peak_power = 0.0;

    double at(int i, int j) const { return values[static_cast<std::size_t>(j) * grid.nx + i]; }
};

FieldMap field_map(const Beamformer &f, const Scenario &s, const GridSpec &grid);

struct RegionLeakage {
    double max_db = 0.0;
    double mean_db = 0.0;
};

/// dB statistics over grid points inside the closed disk. Zero-valued points
/// are skipped by the mean; if every inside point is zero both fields are -inf.
/// Throws EmptyRegion when no grid point falls inside.
RegionLeakage region_leakage(const FieldMap &map, const Disk &disk);

} // namespace caustic
