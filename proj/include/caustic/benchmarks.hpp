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

#include "caustic/beamformer.hpp"
#include "caustic/channel.hpp"
#include "caustic/scenario.hpp"

namespace caustic {

/// Pencil (I + gamma h h^H, I + gamma h_e h_e^H). h and h_e are coupling
/// vectors: the received amplitude is h^H f.
struct PencilSpec {
    ChannelVector h;
    ChannelVector h_e;
    double gamma = 1.0;
};

/// Pencil built from the UE and the eavesdropper estimate with gamma = P_T / sigma^2.
PencilSpec secure_focusing_pencil(const Scenario &s);

struct SecureFocusing {
    Beamformer beamformer;  // unit norm, scheme Eigen
    bool collinear = false; // channels parallel: every f in span gives ratio 1, f = h/|h|
    double objective = 0.0; // generalized Rayleigh quotient at the returned f
};

/// Dominant generalized eigenvector of the pencil.
///
/// Both matrices are identity plus rank one, so the maximizer lies in
/// span{h, h_e}. The pencil is projected onto an orthonormal basis of that
/// span, the 2x2 problem is solved through its characteristic quadratic, and
/// the eigenvector is lifted back. Cost is O(M). The global phase is chosen so
/// the first nonzero entry is real and positive.
SecureFocusing optimal_secure_focusing(const PencilSpec &pencil);

/// (1 + gamma |h^H f|^2) / (1 + gamma |h_e^H f|^2); the generalized Rayleigh quotient when |f| = 1.
double generalized_rayleigh_quotient(std::span<const cdouble> f, const PencilSpec &pencil);

} // namespace caustic
