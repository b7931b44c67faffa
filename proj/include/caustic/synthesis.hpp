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

#include <optional>

#include "caustic/beamformer.hpp"
#include "caustic/profiles.hpp"
#include "caustic/scenario.hpp"

namespace caustic {

struct SchemeOptions {
    std::optional<double> steering_angle; // rad; defaults to the UE direction seen from the array center
    double quadratic_a = 0.5;             // trajectory y = (x / a)^2
};

double steering_angle_for(const Scenario &s, const SchemeOptions &opt);

/// Phase profile of a phase-only scheme; nullopt for the eigen benchmark.
std::optional<PhaseProfile> synthesize_profile(Scheme scheme, const Scenario &s, const SchemeOptions &opt = {});

Beamformer synthesize(Scheme scheme, const Scenario &s, const SchemeOptions &opt = {});

} // namespace caustic
