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

#include <vector>

#include "caustic/beamformer.hpp"
#include "caustic/channel.hpp"
#include "caustic/geometry.hpp"
#include "caustic/scenario.hpp"

namespace caustic {

enum class ElementLabel { Caustic, Focusing };

/// Unwrapped per-element phases (rad) plus the subarray each element belongs to.
struct PhaseProfile {
    std::vector<double> phases;
    std::vector<ElementLabel> labels;

    std::size_t size() const { return phases.size(); }
};

/// Side of the eavesdropping disk on which caustic rays pass.
///
/// PositiveX: rays keep the disk center on their left, so they sweep past the
/// +x flank of the disk. This is the orientation for a caustic subarray at the
/// -x end of the array. NegativeX is its mirror image.
enum class BypassSide { PositiveX, NegativeX };

struct Partition {
    std::vector<int> caustic_indices;  // contiguous, anchored at an array end
    std::vector<int> focusing_indices; // complement, ascending
    BypassSide side = BypassSide::PositiveX;

    bool pure_focusing() const { return caustic_indices.empty(); }
    bool pure_caustic() const { return focusing_indices.empty(); }
};

/// Linear phase k cos(theta) x; theta in (0, pi).
PhaseProfile steering_profile(double theta, const ArrayGeometry &array, const WaveSpec &wave);

/// -k |target - (x, 0)|; target.y > 0.
PhaseProfile focusing_profile(Point2 target, const ArrayGeometry &array, const WaveSpec &wave);

/// (k a^2 / 4) asinh(4 x / a^2); a != 0.
PhaseProfile quadratic_caustic_profile(double a, const ArrayGeometry &array, const WaveSpec &wave);

/// Closed-form phase whose rays are tangent to the circle of `disk`:
///
///   phi(x) = k (2 eps atan((x - x_E + S) / (eps + y_E)) - S),
///   S(x)   = sqrt((x - x_E)^2 + y_E^2 - eps^2).
///
/// The gradient satisfies phi'(x) = k cos(theta) with theta the angle of the
/// tangent from (x, 0) that keeps the center on its left (BypassSide::PositiveX).
/// NegativeX evaluates the mirror image, phi(-x) on the reflected disk.
/// Throws InsideShadow when S(x) is not real and positive.
double caustic_phase(double x, const Disk &disk, const WaveSpec &wave, BypassSide side = BypassSide::PositiveX);

/// caustic_phase at every element, all labelled Caustic.
PhaseProfile caustic_profile(const Disk &disk, BypassSide side, const ArrayGeometry &array, const WaveSpec &wave);

/// Side the caustic rays take when the whole array is in shadow: towards the UE.
BypassSide default_bypass_side(const Scenario &s);

/// Splits the array by line of sight to the UE through the margin-inflated disk.
/// Throws PointInsideDisk if the UE lies in the inflated disk and
/// UnsupportedGeometry if the shadowed elements are not a single run touching
/// an array end (or the inflated disk reaches the array line).
Partition partition_array(const Scenario &s);

/// Caustic phase on the shadowed subarray and UE focusing (plus a continuity
/// constant fixed at the midpoint between the two subarrays) elsewhere.
PhaseProfile piecewise_secure_profile(const Scenario &s);

/// Junction abscissa used for the continuity constant; NaN for single-scheme partitions.
double junction_abscissa(const Partition &p, const ArrayGeometry &array);

/// Unit-modulus weights exp(j phi_m) / sqrt(M).
Beamformer to_beamformer(const PhaseProfile &profile, Scheme scheme);

} // namespace caustic
