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

#include "caustic/synthesis.hpp"

#include <cmath>

#include "caustic/benchmarks.hpp"

namespace caustic {

double steering_angle_for(const Scenario &s, const SchemeOptions &opt)
{
    return opt.steering_angle ? *opt.steering_angle : std::atan2(s.ue.y, s.ue.x);
}

std::optional<PhaseProfile> synthesize_profile(Scheme scheme, const Scenario &s, const SchemeOptions &opt)
{
    switch (scheme) {
    case Scheme::Steering: return steering_profile(steering_angle_for(s, opt), s.array, s.wave);
    case Scheme::Focusing: return focusing_profile(s.ue, s.array, s.wave);
    case Scheme::Quadratic: return quadratic_caustic_profile(opt.quadratic_a, s.array, s.wave);
    case Scheme::Caustic: return caustic_profile(s.synthesis_disk(), default_bypass_side(s), s.array, s.wave);
    case Scheme::Proposed: return piecewise_secure_profile(s);
    case Scheme::Eigen: return std::nullopt;
    }
    return std::nullopt;
}

Beamformer synthesize(Scheme scheme, const Scenario &s, const SchemeOptions &opt)
{
    if (scheme == Scheme::Eigen) {
        return optimal_secure_focusing(secure_focusing_pencil(s)).beamformer;
    }
    return to_beamformer(*synthesize_profile(scheme, s, opt), scheme);
}

} // namespace caustic
