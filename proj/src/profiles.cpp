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

#include "caustic/profiles.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "caustic/errors.hpp"

namespace caustic {

namespace {

PhaseProfile labelled(std::size_t n, ElementLabel label)
{
    PhaseProfile p;
    p.phases.assign(n, 0.0);
    p.labels.assign(n, label);
    return p;
}

double focusing_phase(double x, Point2 target, const WaveSpec &wave)
{
    return -wave.wavenumber * std::hypot(target.x - x, target.y);
}

} // namespace

PhaseProfile steering_profile(double theta, const ArrayGeometry &array, const WaveSpec &wave)
{
    if (!(theta > 0.0 && theta < std::numbers::pi)) {
        throw Error(Errc::InvalidArgument, "steering angle must lie in (0, pi)");
    }
    PhaseProfile p = labelled(array.element_x.size(), ElementLabel::Focusing);
    const double kx = wave.wavenumber * std::cos(theta);
    for (std::size_t m = 0; m < p.size(); ++m) {
        p.phases[m] = kx * array.element_x[m];
    }
    return p;
}

PhaseProfile focusing_profile(Point2 target, const ArrayGeometry &array, const WaveSpec &wave)
{
    if (!(target.y > 0.0)) {
        throw Error(Errc::InvalidArgument, "focus target must lie in y > 0");
    }
    PhaseProfile p = labelled(array.element_x.size(), ElementLabel::Focusing);
    for (std::size_t m = 0; m < p.size(); ++m) {
        p.phases[m] = focusing_phase(array.element_x[m], target, wave);
    }
    return p;
}

PhaseProfile quadratic_caustic_profile(double a, const ArrayGeometry &array, const WaveSpec &wave)
{
    if (a == 0.0 || !std::isfinite(a)) {
        throw Error(Errc::InvalidArgument, "quadratic trajectory scale must be nonzero");
    }
    PhaseProfile p = labelled(array.element_x.size(), ElementLabel::Caustic);
    const double a2 = a * a;
    for (std::size_t m = 0; m < p.size(); ++m) {
        p.phases[m] = 0.25 * wave.wavenumber * a2 * std::asinh(4.0 * array.element_x[m] / a2);
    }
    return p;
}

double caustic_phase(double x, const Disk &disk, const WaveSpec &wave, BypassSide side)
{
    if (side == BypassSide::NegativeX) {
        return caustic_phase(-x, mirrored(disk), wave, BypassSide::PositiveX);
    }
    const double eps = disk.radius;
    const double dx = x - disk.center.x;
    const double s2 = dx * dx + disk.center.y * disk.center.y - eps * eps;
    if (!(s2 > 0.0)) {
        throw Error(Errc::InsideShadow, "array abscissa has no tangent to the disk");
    }
    const double s = std::sqrt(s2);
    return wave.wavenumber * (2.0 * eps * std::atan((dx + s) / (eps + disk.center.y)) - s);
}

PhaseProfile caustic_profile(const Disk &disk, BypassSide side, const ArrayGeometry &array, const WaveSpec &wave)
{
    PhaseProfile p = labelled(array.element_x.size(), ElementLabel::Caustic);
    for (std::size_t m = 0; m < p.size(); ++m) {
        p.phases[m] = caustic_phase(array.element_x[m], disk, wave, side);
    }
    return p;
}

BypassSide default_bypass_side(const Scenario &s)
{
    return s.eavesdropper.center.x <= s.ue.x ? BypassSide::PositiveX : BypassSide::NegativeX;
}

Partition partition_array(const Scenario &s)
{
    if (!s.eavesdropper.is_valid()) {
        throw Error(Errc::InvalidArgument, "eavesdropping disk needs radius > 0 and center.y > radius");
    }
    if (!(s.epsilon_margin >= 0.0)) {
        throw Error(Errc::InvalidArgument, "epsilon margin must be non-negative");
    }
    if (!(s.ue.y > 0.0)) {
        throw Error(Errc::InvalidArgument, "UE must lie in y > 0");
    }
    const Disk disk = s.synthesis_disk();
    if (!disk.is_valid()) {
        throw Error(Errc::UnsupportedGeometry, "inflated disk reaches the array line");
    }
    if (disk.contains(s.ue)) {
        throw Error(Errc::PointInsideDisk, "UE lies inside the eavesdropping region");
    }

    Partition part;
    const int n = s.array.num_elements;
    for (int m = 0; m < n; ++m) {
        if (segment_intersects_disk(s.array.element(m), s.ue, disk)) {
            part.caustic_indices.push_back(m);
        } else {
            part.focusing_indices.push_back(m);
        }
    }
    if (part.caustic_indices.empty()) {
        return part;
    }
    const int lo = part.caustic_indices.front();
    const int hi = part.caustic_indices.back();
    if (hi - lo + 1 != static_cast<int>(part.caustic_indices.size())) {
        throw Error(Errc::UnsupportedGeometry, "shadowed elements are not contiguous");
    }
    if (lo != 0 && hi != n - 1) {
        throw Error(Errc::UnsupportedGeometry, "shadowed elements do not touch an array end");
    }
    if (part.pure_caustic()) {
        part.side = default_bypass_side(s);
    } else {
        part.side = lo == 0 ? BypassSide::PositiveX : BypassSide::NegativeX;
    }
    return part;
}

double junction_abscissa(const Partition &p, const ArrayGeometry &array)
{
    if (p.pure_caustic() || p.pure_focusing()) {
        return std::numeric_limits<double>::quiet_NaN();
    }
    const auto &x = array.element_x;
    if (p.side == BypassSide::PositiveX) {
        const auto last = static_cast<std::size_t>(p.caustic_indices.back());
        return 0.5 * (x[last] + x[last + 1]);
    }
    const auto first = static_cast<std::size_t>(p.caustic_indices.front());
    return 0.5 * (x[first - 1] + x[first]);
}

PhaseProfile piecewise_secure_profile(const Scenario &s)
{
    const Partition part = partition_array(s);
    if (part.pure_focusing()) {
        return focusing_profile(s.ue, s.array, s.wave);
    }
    const Disk disk = s.synthesis_disk();
    if (part.pure_caustic()) {
        return caustic_profile(disk, part.side, s.array, s.wave);
    }

    const double xj = junction_abscissa(part, s.array);
    const double offset = caustic_phase(xj, disk, s.wave, part.side) - focusing_phase(xj, s.ue, s.wave);

    PhaseProfile p = labelled(s.array.element_x.size(), ElementLabel::Focusing);
    for (int m : part.caustic_indices) {
        const auto i = static_cast<std::size_t>(m);
        p.phases[i] = caustic_phase(s.array.element_x[i], disk, s.wave, part.side);
        p.labels[i] = ElementLabel::Caustic;
    }
    for (int m : part.focusing_indices) {
        const auto i = static_cast<std::size_t>(m);
        p.phases[i] = focusing_phase(s.array.element_x[i], s.ue, s.wave) + offset;
    }
    return p;
}

Beamformer to_beamformer(const PhaseProfile &profile, Scheme scheme)
{
    Beamformer bf;
    bf.scheme = scheme;
    bf.weights.resize(profile.size());
    const double amp = 1.0 / std::sqrt(static_cast<double>(profile.size()));
    for (std::size_t m = 0; m < profile.size(); ++m) {
        const double wrapped = std::remainder(profile.phases[m], 2.0 * std::numbers::pi);
        bf.weights[m] = std::polar(amp, wrapped);
    }
    return bf;
}

} // namespace caustic
