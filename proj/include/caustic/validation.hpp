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

#include <span>
#include <vector>

#include "caustic/profiles.hpp"
#include "caustic/synthesis.hpp"

namespace caustic {

/// cos(theta_m) = phi'(x_m) / k from the sampled phases, using fourth-order
/// finite differences (centered in the interior, biased five-point stencils
/// at the two elements nearest each end). Falls back to second order below
/// five elements. Values are not clamped to [-1, 1].
std::vector<double> departure_cosines(std::span<const double> phases, double spacing, double wavenumber);

/// departure_cosines applied separately to each run of equally labelled
/// elements, so no stencil reaches across a caustic/focusing junction.
/// A run of a single element gets 0.
std::vector<double> subarray_cosines(const PhaseProfile &profile, double spacing, double wavenumber);

/// One ray per element, leaving (x_m, 0) at acos(clamped subarray cosine).
std::vector<Ray> departure_rays(const PhaseProfile &profile, const ArrayGeometry &array, const WaveSpec &wave);

enum class CheckKind { AngleDeviation, FocusMiss, DiskTangency, ParabolaTangency, None };

struct ElementCheck {
    int index = 0;
    double x = 0.0;
    ElementLabel label = ElementLabel::Focusing;
    double direction_cosine = 0.0;
    double angle = 0.0; // rad
    CheckKind kind = CheckKind::None;
    double residual = 0.0;  // rad for AngleDeviation, meters otherwise
    double tolerance = 0.0;
    bool pass = true;
};

struct ValidationReport {
    std::vector<ElementCheck> elements; // interior elements only
    double max_abs_cosine = 0.0;
    double max_angle_deviation = 0.0;
    double max_focus_miss = 0.0;
    double max_tangency_residual = 0.0; // | distance(ray, center) - eps |, meters
    double max_parabola_residual = 0.0;
    bool pass = true;
};

namespace tolerance {
inline constexpr double kSnellSlack = 1e-6;       // |cos| <= 1 + slack
inline constexpr double kSteeringAngle = 1e-9;    // rad
inline constexpr double kFocusMiss = 1e-6;        // m
inline constexpr double kTangencyRelative = 0.02; // of the synthesis radius
inline constexpr double kParabola = 1e-5;         // m
} // namespace tolerance

/// Checks that the rays implied by a profile do what the scheme intends:
/// constant angle (steering), pass through the UE (focusing and the focusing
/// subarray), graze the synthesis disk (caustic subarray), or touch the
/// parabola (quadratic, x >= 0 half only; the odd profile sends x < 0 rays
/// parallel to their mirror partners instead).
ValidationReport validate_profile(const PhaseProfile &profile, Scheme scheme, const Scenario &s,
                                  const SchemeOptions &opt = {});

} // namespace caustic
