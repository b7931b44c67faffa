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

#include "caustic/benchmarks.hpp"

#include <array>
#include <cmath>

#include "caustic/errors.hpp"

namespace caustic {

namespace {

// a^H b
cdouble inner(std::span<const cdouble> a, std::span<const cdouble> b)
{
    cdouble s{0.0, 0.0};
    for (std::size_t i = 0; i < a.size(); ++i) {
        s += std::conj(a[i]) * b[i];
    }
    return s;
}

double norm2(std::span<const cdouble> a) { return std::sqrt(std::real(inner(a, a))); }

void fix_global_phase(std::vector<cdouble> &f)
{
    for (std::size_t k = 0; k < f.size(); ++k) {
        const double mag = std::abs(f[k]);
        if (mag > 0.0) {
            const cdouble rot = std::conj(f[k]) / mag;
            for (cdouble &w : f) {
                w *= rot;
            }
            f[k] = mag;
            return;
        }
    }
}

} // namespace

PencilSpec secure_focusing_pencil(const Scenario &s)
{
    return {coupling_vector(s.array, s.ue, s.wave), coupling_vector(s.array, s.eavesdropper.center, s.wave),
            s.budget.snr_scale()};
}

double generalized_rayleigh_quotient(std::span<const cdouble> f, const PencilSpec &pencil)
{
    const double num = 1.0 + pencil.gamma * std::norm(inner(pencil.h, f));
    const double den = 1.0 + pencil.gamma * std::norm(inner(pencil.h_e, f));
    return num / den;
}

SecureFocusing optimal_secure_focusing(const PencilSpec &pencil)
{
    const std::size_t n = pencil.h.size();
    if (n == 0 || pencil.h_e.size() != n) {
        throw Error(Errc::InvalidArgument, "pencil channels must be nonempty and of equal length");
    }
    if (!(pencil.gamma > 0.0) || !std::isfinite(pencil.gamma)) {
        throw Error(Errc::InvalidArgument, "pencil gamma must be positive");
    }
    const double ha = norm2(pencil.h);
    const double hb = norm2(pencil.h_e);
    if (!(ha > 0.0) || !(hb > 0.0)) {
        throw Error(Errc::InvalidArgument, "pencil channels must be nonzero");
    }

    SecureFocusing out;
    out.beamformer.scheme = Scheme::Eigen;

    // Orthonormal basis {u1, u2} of span{h, h_e}.
    std::vector<cdouble> u1(n);
    for (std::size_t i = 0; i < n; ++i) {
        u1[i] = pencil.h[i] / ha;
    }
    const cdouble b1 = inner(u1, pencil.h_e);
    std::vector<cdouble> u2(n);
    for (std::size_t i = 0; i < n; ++i) {
        u2[i] = pencil.h_e[i] - b1 * u1[i];
    }
    const double b2 = norm2(u2);

    const bool collinear = 1.0 - std::abs(b1) / hb <= 1e-12 || b2 <= 1e-12 * hb;
    if (collinear) {
        out.collinear = true;
        out.beamformer.weights = std::move(u1);
        fix_global_phase(out.beamformer.weights);
        out.objective = generalized_rayleigh_quotient(out.beamformer.weights, pencil);
        return out;
    }
    for (cdouble &v : u2) {
        v /= b2;
    }

    // In the {u1, u2} basis: h -> (|h|, 0), h_e -> (b1, b2) with b2 real > 0.
    const double g = pencil.gamma;
    const double a11 = 1.0 + g * ha * ha;
    const double a22 = 1.0;
    const double b11 = 1.0 + g * std::norm(b1);
    const double b22 = 1.0 + g * b2 * b2;
    const cdouble b12 = g * b1 * b2; // B = I + g beta beta^H with beta = (b1, b2)

    // det(A - lambda B) = detB lambda^2 - p lambda + detA, with A diagonal.
    const double det_a = a11 * a22;
    const double det_b = b11 * b22 - std::norm(b12);
    const double p = a11 * b22 + a22 * b11;
    const double disc = std::max(0.0, p * p - 4.0 * det_a * det_b);
    const double lambda = (p + std::sqrt(disc)) / (2.0 * det_b);

    const cdouble m11 = a11 - lambda * b11;
    const cdouble m12 = -lambda * b12;
    const cdouble m21 = -lambda * std::conj(b12);
    const cdouble m22 = a22 - lambda * b22;
    std::array<cdouble, 2> c;
    if (std::norm(m11) + std::norm(m12) >= std::norm(m21) + std::norm(m22)) {
        c = {-m12, m11};
    } else {
        c = {m22, -m21};
    }
    if (std::norm(c[0]) + std::norm(c[1]) == 0.0) {
        c = {1.0, 0.0};
    }

    std::vector<cdouble> f(n);
    for (std::size_t i = 0; i < n; ++i) {
        f[i] = c[0] * u1[i] + c[1] * u2[i];
    }
    const double fn = norm2(f);
    for (cdouble &v : f) {
        v /= fn;
    }
    fix_global_phase(f);
    out.beamformer.weights = std::move(f);
    out.objective = generalized_rayleigh_quotient(out.beamformer.weights, pencil);
    return out;
}

} // namespace caustic
