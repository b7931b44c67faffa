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

#include "caustic/channel.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "caustic/errors.hpp"

namespace caustic {

WaveSpec WaveSpec::from_frequency(double hz)
{
    if (!(hz > 0.0) || !std::isfinite(hz)) {
        throw Error(Errc::InvalidArgument, "carrier frequency must be positive");
    }
    WaveSpec w;
    w.carrier_frequency = hz;
    w.wavelength = kSpeedOfLight / hz;
    w.wavenumber = 2.0 * std::numbers::pi / w.wavelength;
    return w;
}

ArrayGeometry ArrayGeometry::uniform(int num_elements, double spacing)
{
    if (num_elements < 1) {
        throw Error(Errc::InvalidArgument, "array needs at least one element");
    }
    if (!(spacing > 0.0) || !std::isfinite(spacing)) {
        throw Error(Errc::InvalidArgument, "element spacing must be positive");
    }
    ArrayGeometry a;
    a.num_elements = num_elements;
    a.spacing = spacing;
    a.element_x.resize(static_cast<std::size_t>(num_elements));
    const double mid = 0.5 * (num_elements - 1);
    for (int m = 0; m < num_elements; ++m) {
        a.element_x[static_cast<std::size_t>(m)] = (m - mid) * spacing;
    }
    return a;
}

double dbm_to_watts(double dbm) { return std::pow(10.0, (dbm - 30.0) / 10.0); }

LinkBudget LinkBudget::from_dbm(double transmit_dbm, double noise_dbm)
{
    LinkBudget b{dbm_to_watts(transmit_dbm), dbm_to_watts(noise_dbm)};
    if (!(b.transmit_power > 0.0) || !(b.noise_power > 0.0) || !std::isfinite(b.transmit_power) ||
        !std::isfinite(b.noise_power)) {
        throw Error(Errc::InvalidArgument, "link budget powers must be positive and finite");
    }
    return b;
}

cdouble green(Point2 tx, Point2 rx, const WaveSpec &wave)
{
    const double r = distance(tx, rx);
    if (!(r > 0.0)) {
        throw Error(Errc::CoincidentPoints, "transmitter and receiver coincide");
    }
    return std::polar(1.0 / r, wave.wavenumber * r);
}

ChannelVector channel_vector(const ArrayGeometry &array, Point2 receiver, const WaveSpec &wave)
{
    ChannelVector h(static_cast<std::size_t>(array.num_elements));
    for (int m = 0; m < array.num_elements; ++m) {
        h[static_cast<std::size_t>(m)] = green(array.element(m), receiver, wave);
    }
    return h;
}

ChannelVector coupling_vector(const ArrayGeometry &array, Point2 receiver, const WaveSpec &wave)
{
    ChannelVector c = channel_vector(array, receiver, wave);
    std::transform(c.begin(), c.end(), c.begin(), [](cdouble v) { return std::conj(v); });
    return c;
}

cdouble received_amplitude(std::span<const cdouble> weights, const ArrayGeometry &array, Point2 p,
                           const WaveSpec &wave)
{
    if (weights.size() != array.element_x.size()) {
        throw Error(Errc::InvalidArgument, "beamformer length does not match the array");
    }
    cdouble g{0.0, 0.0};
    for (std::size_t m = 0; m < weights.size(); ++m) {
        g += weights[m] * green({array.element_x[m], 0.0}, p, wave);
    }
    return g;
}

double rate(double g_mag2, const LinkBudget &budget)
{
    return std::log2(1.0 + budget.transmit_power * g_mag2 / budget.noise_power);
}

double secrecy_rate(double r_ue, double r_e) { return std::max(0.0, r_ue - r_e); }

} // namespace caustic
