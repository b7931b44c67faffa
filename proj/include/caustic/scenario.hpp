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

#include "caustic/channel.hpp"
#include "caustic/geometry.hpp"

namespace caustic {

/// Everything the synthesis and evaluation routines need to know about a deployment.
struct Scenario {
    WaveSpec wave;
    ArrayGeometry array;
    Point2 ue;
    Disk eavesdropper;           // estimate r_E and localization radius eps
    double epsilon_margin = 0.0; // inflation used for partitioning and caustic synthesis only
    LinkBudget budget;

    /// Disk used for synthesis: the eavesdropping region inflated by the margin.
    Disk synthesis_disk() const { return eavesdropper.inflated(epsilon_margin); }
};

/// 28 GHz, 256 half-wavelength elements, UE at (1.5, 3), eavesdropper estimate
/// (0.4, 1.25) with 0.25 m radius, 20 dBm transmit and -50 dBm noise power.
Scenario reference_scenario();

/// Reflection x -> -x of every position; the array is symmetric so it maps onto itself.
Scenario mirrored(const Scenario &s);

} // namespace caustic
