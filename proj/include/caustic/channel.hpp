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

#include <complex>
#include <span>
#include <vector>

#include "caustic/geometry.hpp"

namespace caustic {

using cdouble = std::complex<double>;

inline constexpr double kSpeedOfLight = 299792458.0;

struct WaveSpec {
    double carrier_frequency = 0.0; // Hz
    double wavelength = 0.0;        // m
    double wavenumber = 0.0;        // rad/m

    static WaveSpec from_frequency(double hz);
};

/// Uniform linear array on the x-axis, centered at the origin.
struct ArrayGeometry {
    int num_elements = 0;
    double spacing = 0.0;
    std::vector<double> element_x;

    static ArrayGeometry uniform(int num_elements, double spacing);

    double aperture() const { return (num_elements - 1) * spacing; }
    Point2 element(int m) const { return {element_x[static_cast<std::size_t>(m)], 0.0}; }
};

using ChannelVector = std::vector<cdouble>;

struct LinkBudget {
    double transmit_power = 0.0; // W
    double noise_power = 0.0;    // W

    static LinkBudget from_dbm(double transmit_dbm, double noise_dbm);
    double snr_scale() const { return transmit_power / noise_power; }
};

double dbm_to_watts(double dbm);

/// Free-space spherical wave exp(j k r) / r. Throws CoincidentPoints when tx == rx.
cdouble green(Point2 tx, Point2 rx, const WaveSpec &wave);

/// Per-element green(element m, receiver).
ChannelVector channel_vector(const ArrayGeometry &array, Point2 receiver, const WaveSpec &wave);

/// Vector c such that c^H f equals the forward field received_amplitude(f, p).
/// This is the conjugate of channel_vector and is the form the rate pencil uses.
ChannelVector coupling_vector(const ArrayGeometry &array, Point2 receiver, const WaveSpec &wave);

/// Forward field g(p) = sum_m f_m exp(j k r_m) / r_m.
cdouble received_amplitude(std::span<const cdouble> weights, const ArrayGeometry &array, Point2 p,
                           const WaveSpec &wave);

/// log2(1 + P_T g / sigma^2) in bit/s/Hz.
double rate(double g_mag2, const LinkBudget &budget);

double secrecy_rate(double r_ue, double r_e);

} // namespace caustic
