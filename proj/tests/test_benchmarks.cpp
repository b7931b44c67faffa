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


#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "caustic/benchmarks.hpp"
#include "caustic/errors.hpp"
#include "caustic/evaluation.hpp"
#include "oracles.hpp"

using namespace caustic;

namespace {

using CVec = std::vector<cdouble>;

CVec random_vector(std::mt19937_64 &rng, std::size_t n, double scale = 1.0)
{
    std::normal_distribution<double> nd(0.0, scale);
    CVec v(n);
    for (cdouble &x : v) {
        x = {nd(rng), nd(rng)};
    }
    return v;
}

cdouble dotc(const CVec &a, const CVec &b)
{
    cdouble s{};
    for (std::size_t i = 0; i < a.size(); ++i) {
        s += std::conj(a[i]) * b[i];
    }
    return s;
}

} // namespace

TEST_CASE("closed form matches a dense generalized eigensolve")
{
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> lg(-2.0, 3.0);
    for (int k = 0; k < 60; ++k) {
        PencilSpec p{random_vector(rng, 8), random_vector(rng, 8), std::pow(10.0, lg(rng))};
        const SecureFocusing s = optimal_secure_focusing(p);
        CHECK_FALSE(s.collinear);
        const double lambda_ref = oracle::max_generalized_eigenvalue(p.h, p.h_e, p.gamma);
        CHECK(s.objective == doctest::Approx(lambda_ref).epsilon(1e-10));
        CHECK(std::real(dotc(s.beamformer.weights, s.beamformer.weights)) == doctest::Approx(1.0).epsilon(1e-14));
        // The first entry carries the zero phase.
        CHECK(s.beamformer.weights[0].imag() == 0.0);
        CHECK(s.beamformer.weights[0].real() > 0.0);
        // Random directions never beat it.
        for (int t = 0; t < 20; ++t) {
            CVec probe = random_vector(rng, 8);
            const double pn = std::sqrt(std::real(dotc(probe, probe)));
            for (cdouble &v : probe) {
                v /= pn;
            }
            CHECK(generalized_rayleigh_quotient(probe, p) <= s.objective * (1 + 1e-12));
        }
    }
}

TEST_CASE("orthogonal channels give the matched filter")
{
    const std::size_t n = 8;
    CVec h(n);
    CVec he(n);
    for (std::size_t i = 0; i < n; ++i) {
        h[i] = std::polar(0.7, 2 * std::numbers::pi * i / n + 0.3);
        he[i] = std::polar(1.3, 2 * std::numbers::pi * 3 * i / n);
    }
    const SecureFocusing s = optimal_secure_focusing({h, he, 10.0});
    CHECK_FALSE(s.collinear);
    const cdouble rot = std::conj(h[0]) / std::abs(h[0]);
    for (std::size_t i = 0; i < n; ++i) {
        CHECK(std::abs(s.beamformer.weights[i] - rot * h[i] / (0.7 * std::sqrt(8.0))) < 1e-14);
    }
    CHECK(s.objective == doctest::Approx(1.0 + 10.0 * 0.49 * 8));
}

TEST_CASE("collinear channels")
{
    std::mt19937_64 rng(8);
    const CVec h = random_vector(rng, 6);
    CVec he = h;
    for (cdouble &v : he) {
        v *= cdouble{0.2, -0.4};
    }
    const SecureFocusing s = optimal_secure_focusing({h, he, 2.0});
    CHECK(s.collinear);
    const double nh = std::sqrt(std::real(dotc(h, h)));
    CHECK(std::abs(dotc(h, s.beamformer.weights)) == doctest::Approx(nh).epsilon(1e-12));
}

TEST_CASE("invalid pencils")
{
    CHECK_THROWS_AS(optimal_secure_focusing({{}, {}, 1.0}), Error);
    CHECK_THROWS_AS(optimal_secure_focusing({{1.0, 2.0}, {1.0}, 1.0}), Error);
    CHECK_THROWS_AS(optimal_secure_focusing({{1.0, 2.0}, {1.0, 0.5}, 0.0}), Error);
    CHECK_THROWS_AS(optimal_secure_focusing({{0.0, 0.0}, {1.0, 0.5}, 1.0}), Error);
}

TEST_CASE("rate difference equals the Rayleigh quotient under the coupling convention")
{
    const Scenario s = reference_scenario();
    const PencilSpec p = secure_focusing_pencil(s);
    CHECK(p.gamma == doctest::Approx(1e7));
    const SecureFocusing sf = optimal_secure_focusing(p);
    const Point2 pts[] = {s.eavesdropper.center};
    const RobustReport r = robust_report(sf.beamformer, s, pts);
    CHECK(std::exp2(r.r_ue - r.r_e_worst) == doctest::Approx(sf.objective).epsilon(1e-8));
    // Coupling entries are conjugated Green functions.
    CHECK(p.h[10] == std::conj(green(s.array.element(10), s.ue, s.wave)));
}
