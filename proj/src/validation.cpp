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

#include "caustic/validation.hpp"

#include <algorithm>
#include <cmath>

#include "caustic/errors.hpp"

namespace caustic {

std::vector<double> departure_cosines(std::span<const double> phases, double spacing, double wavenumber)
{
    const std::size_t n = phases.size();
    std::vector<double> c(n, 0.0);
    if (n < 2) {
        return c;
    }
    const double scale = 1.0 / (spacing * wavenumber);
    const auto &p = phases;
    if (n < 5) {
        for (std::size_t m = 0; m < n; ++m) {
            if (m == 0) {
                c[m] = (p[1] - p[0]) * scale;
            } else if (m == n - 1) {
                c[m] = (p[n - 1] - p[n - 2]) * scale;
            } else {
                c[m] = 0.5 * (p[m + 1] - p[m - 1]) * scale;
            }
        }
        return c;
    }
    const double s12 = scale / 12.0;
    for (std::size_t m = 2; m + 2 < n; ++m) {
        c[m] = (-p[m + 2] + 8.0 * p[m + 1] - 8.0 * p[m - 1] + p[m - 2]) * s12;
    }
    c[0] = (-25.0 * p[0] + 48.0 * p[1] - 36.0 * p[2] + 16.0 * p[3] - 3.0 * p[4]) * s12;
    c[1] = (-3.0 * p[0] - 10.0 * p[1] + 18.0 * p[2] - 6.0 * p[3] + p[4]) * s12;
    c[n - 1] = -(-25.0 * p[n - 1] + 48.0 * p[n - 2] - 36.0 * p[n - 3] + 16.0 * p[n - 4] - 3.0 * p[n - 5]) * s12;
    c[n - 2] = -(-3.0 * p[n - 1] - 10.0 * p[n - 2] + 18.0 * p[n - 3] - 6.0 * p[n - 4] + p[n - 5]) * s12;
    return c;
}

std::vector<double> subarray_cosines(const PhaseProfile &profile, double spacing, double wavenumber)
{
    std::vector<double> out(profile.size(), 0.0);
    std::size_t begin = 0;
    while (begin < profile.size()) {
        std::size_t end = begin + 1;
        while (end < profile.size() && profile.labels[end] == profile.labels[begin]) {
            ++end;
        }
        const auto run = departure_cosines(std::span(profile.phases).subspan(begin, end - begin), spacing, wavenumber);
        std::copy(run.begin(), run.end(), out.begin() + static_cast<std::ptrdiff_t>(begin));
        begin = end;
    }
    return out;
}

std::vector<Ray> departure_rays(const PhaseProfile &profile, const ArrayGeometry &array, const WaveSpec &wave)
{
    const auto cosines = subarray_cosines(profile, array.spacing, wave.wavenumber);
    std::vector<Ray> rays(cosines.size());
    for (std::size_t m = 0; m < rays.size(); ++m) {
        rays[m] = {{array.element_x[m], 0.0}, std::acos(std::clamp(cosines[m], -1.0, 1.0))};
    }
    return rays;
}

ValidationReport validate_profile(const PhaseProfile &profile, Scheme scheme, const Scenario &s,
                                  const SchemeOptions &opt)
{
    if (scheme == Scheme::Eigen) {
        throw Error(Errc::InvalidArgument, "the eigen benchmark has no phase profile to validate");
    }
    if (profile.size() != s.array.element_x.size()) {
        throw Error(Errc::InvalidArgument, "profile length does not match the array");
    }
    const auto cosines = subarray_cosines(profile, s.array.spacing, s.wave.wavenumber);
    const Disk disk = s.synthesis_disk();
    const double steer = steering_angle_for(s, opt);
    const double a2 = opt.quadratic_a * opt.quadratic_a;

    ValidationReport rep;
    const int n = static_cast<int>(profile.size());
    for (int m = 1; m + 1 < n; ++m) {
        const auto i = static_cast<std::size_t>(m);
        ElementCheck chk;
        chk.index = m;
        chk.x = s.array.element_x[i];
        chk.label = profile.labels[i];
        chk.direction_cosine = cosines[i];
        chk.angle = std::acos(std::clamp(cosines[i], -1.0, 1.0));
        const Ray ray{{chk.x, 0.0}, chk.angle};

        switch (scheme) {
        case Scheme::Steering:
            chk.kind = CheckKind::AngleDeviation;
            chk.residual = std::abs(chk.angle - steer);
            chk.tolerance = tolerance::kSteeringAngle;
            rep.max_angle_deviation = std::max(rep.max_angle_deviation, chk.residual);
            break;
        case Scheme::Quadratic:
            if (chk.x >= 0.0) {
                // A ray from (x, 0) with slope 4x/a^2 touches y = (x/a)^2 at (2x, 4x^2/a^2).
                chk.kind = CheckKind::ParabolaTangency;
                chk.residual = line_distance(ray, {2.0 * chk.x, 4.0 * chk.x * chk.x / a2});
                chk.tolerance = tolerance::kParabola;
                rep.max_parabola_residual = std::max(rep.max_parabola_residual, chk.residual);
            }
            break;
        case Scheme::Focusing:
        case Scheme::Caustic:
        case Scheme::Proposed:
            if (chk.label == ElementLabel::Caustic) {
                chk.kind = CheckKind::DiskTangency;
                chk.residual = std::abs(line_distance(ray, disk.center) - disk.radius);
                chk.tolerance = tolerance::kTangencyRelative * disk.radius;
                rep.max_tangency_residual = std::max(rep.max_tangency_residual, chk.residual);
            } else {
                chk.kind = CheckKind::FocusMiss;
                chk.residual = line_distance(ray, s.ue);
                chk.tolerance = tolerance::kFocusMiss;
                rep.max_focus_miss = std::max(rep.max_focus_miss, chk.residual);
            }
            break;
        case Scheme::Eigen: break;
        }

        const bool snell = std::abs(cosines[i]) <= 1.0 + tolerance::kSnellSlack;
        chk.pass = snell && (chk.kind == CheckKind::None || chk.residual <= chk.tolerance);
        rep.max_abs_cosine = std::max(rep.max_abs_cosine, std::abs(cosines[i]));
        rep.pass = rep.pass && chk.pass;
        rep.elements.push_back(chk);
    }
    return rep;
}

} // namespace caustic
