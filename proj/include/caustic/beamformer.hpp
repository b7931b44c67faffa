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
#include <string_view>
#include <vector>

#include "caustic/channel.hpp"

namespace caustic {

enum class Scheme { Steering, Focusing, Quadratic, Caustic, Proposed, Eigen };

std::string_view to_string(Scheme s) noexcept;
std::optional<Scheme> parse_scheme(std::string_view name) noexcept;

/// Complex array weights. Phase-only schemes carry |w_m| = 1/sqrt(M); the
/// eigen benchmark carries sum |w_m|^2 = 1 with free amplitudes.
struct Beamformer {
    std::vector<cdouble> weights;
    Scheme scheme = Scheme::Focusing;

    std::size_t size() const { return weights.size(); }
};

} // namespace caustic
