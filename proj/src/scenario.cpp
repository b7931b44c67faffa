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

#include "caustic/scenario.hpp"

#include "caustic/beamformer.hpp"

namespace caustic {

std::string_view to_string(Scheme s) noexcept
{
    switch (s) {
    case Scheme::Steering: return "steering";
    case Scheme::Focusing: return "focusing";
    case Scheme::Quadratic: return "quadratic";
    case Scheme::Caustic: return "caustic";
    case Scheme::Proposed: return "proposed";
    case Scheme::Eigen: return "eigen";
    }
    return "unknown";
}

std::optional<Scheme> parse_scheme(std::string_view name) noexcept
{
    for (Scheme s : {Scheme::Steering, Scheme::Focusing, Scheme::Quadratic, Scheme::Caustic, Scheme::Proposed,
                     Scheme::Eigen}) {
        if (to_string(s) == name) {
            return s;
        }
    }
    return std::nullopt;
}

Scenario reference_scenario()
{
    Scenario s;
    s.wave = WaveSpec::from_frequency(28e9);
    s.array = ArrayGeometry::uniform(256, 0.5 * s.wave.wavelength);
    s.ue = {1.5, 3.0};
    s.eavesdropper = {{0.4, 1.25}, 0.25};
    s.epsilon_margin = 0.0;
    s.budget = LinkBudget::from_dbm(20.0, -50.0);
    return s;
}

Scenario mirrored(const Scenario &s)
{
    Scenario m = s;
    m.ue = mirrored(s.ue);
    m.eavesdropper = mirrored(s.eavesdropper);
    return m;
}

} // namespace caustic
