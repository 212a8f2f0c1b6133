// Copyright 2026 The bispinor Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <numbers>

#include "bispinor/errors.hpp"
#include "bispinor/scenarios.hpp"
#include "oracles.hpp"

using namespace bispinor;

namespace {

constexpr double pi = std::numbers::pi;

double sech(double x) { return 1.0 / std::cosh(x); }

std::array<double, 3> arr(const Vec3& v) { return {v[0], v[1], v[2]}; }

// Bell-like pair computed end to end with Eigen: spinors from energy projectors, boost by matrix exponential.
oracle::Vec oracle_pair(BoostFramework fw, double theta, double xi0, double omega) {
    const MomentumPair m = framework_momenta(fw, xi0);
    const std::array<double, 3> n = fw == BoostFramework::Parallel ? std::array{0.0, 0.0, 1.0} : std::array{1.0, 0.0, 0.0};
    return oracle::bell_pair(arr(m.p.momentum()), arr(m.q.momentum()), theta, oracle::boost(omega, n));
}

// Negativities in NegativitySet order: qubits P1=0, S1=1, P2=2, S2=3.
std::array<double, 7> oracle_set(const oracle::Vec& psi) {
    using oracle::negativity;
    return {negativity(psi, 4, {1}, {0, 2, 3}), negativity(psi, 4, {3}, {0, 1, 2}), negativity(psi, 4, {0}, {1, 2, 3}),
            negativity(psi, 4, {2}, {0, 1, 3}), negativity(psi, 4, {1}, {3}),       negativity(psi, 4, {0, 2}, {1, 3}),
            negativity(psi, 4, {0}, {2})};
}

}  // namespace

TEST_SUITE("scenarios") {

TEST_CASE("framework momenta") {
    const auto [p, q] = parallel_framework(1.5);
    CHECK(p.e == 1.0);
    CHECK(q.pz == doctest::Approx(-std::sinh(1.5)));
    const auto [pc, qc] = com_framework(0.5, 2.0);
    CHECK(pc.pz == doctest::Approx(2.0 * std::sinh(0.5)));
    CHECK(qc.pz == doctest::Approx(-pc.pz));
    CHECK(pc.e == qc.e);
    CHECK_THROWS_AS(parallel_framework(-0.1), InvalidArgument);
    CHECK_THROWS_AS(com_framework(-0.1), InvalidArgument);
    CHECK(framework_boost(BoostFramework::Parallel, 0.3).n[2] == 1.0);
    CHECK(framework_boost(BoostFramework::Perpendicular, 0.3).n[0] == 1.0);
}

TEST_CASE("Bell-like state matches the Eigen construction") {
    for (double theta : {0.0, 0.4, pi / 4, 2.0}) {
        const auto [p, q] = com_framework(0.8);
        const TwoParticleState s = build_bell_state(p, q, theta);
        CHECK(s.psi.norm() == doctest::Approx(1.0));
        const oracle::Vec want = oracle_pair(BoostFramework::Perpendicular, theta, 0.8, 0.0);
        CHECK(std::abs(want.dot(oracle::to_eigen(s.psi))) == doctest::Approx(1.0).epsilon(1e-13));
    }
}

TEST_CASE("parallel boosts reproduce the closed forms") {
    for (double theta : {0.1, pi / 8, pi / 4, 1.0}) {
        for (double xi0 : {0.0, 0.5, 1.0, 2.0}) {
            const auto rows = negativity_sweep(theta, xi0, {0.0, 3.0, 0.5}, BoostFramework::Parallel);
            for (const auto& r : rows) {
                const double s = std::abs(std::sin(2 * theta));
                const double c = sech(r.omega) * sech(r.omega - xi0);
                const auto got = r.set;
                CHECK(got.s1_rest == doctest::Approx(s).epsilon(1e-12));
                CHECK(got.s2_rest == doctest::Approx(s).epsilon(1e-12));
                CHECK(std::abs(got.p1_rest - std::abs(std::tanh(r.omega) * s)) < 1e-12);
                CHECK(std::abs(got.p2_rest - std::abs(std::tanh(r.omega - xi0) * s)) < 1e-12);
                CHECK(std::abs(got.s1s2 - c * s) < 1e-12);
                CHECK(std::abs(got.p1p2_s1s2 - std::sqrt(1 - c * c) * s / 3) < 1e-12);
                CHECK(got.p1p2 < 1e-12);
                const auto cf = closed_form_parallel(theta, xi0, r.omega).values();
                for (std::size_t k = 0; k < 7; ++k) CHECK(std::abs(got.values()[k] - cf[k]) < 1e-12);
            }
        }
    }
}

TEST_CASE("both frameworks agree with the Eigen pipeline") {
    for (const BoostFramework fw : {BoostFramework::Parallel, BoostFramework::Perpendicular}) {
        for (double theta : {0.3, pi / 4}) {
            for (double xi0 : {0.5, 1.5}) {
                for (const auto& r : negativity_sweep(theta, xi0, {0.0, 3.0, 1.0}, fw)) {
                    const auto want = oracle_set(oracle_pair(fw, theta, xi0, r.omega));
                    const auto got = r.set.values();
                    for (std::size_t k = 0; k < 7; ++k) CHECK(std::abs(got[k] - want[k]) < 1e-11);
                }
            }
        }
    }
}

TEST_CASE("particle-particle entanglement is boost invariant") {
    for (const BoostFramework fw : {BoostFramework::Parallel, BoostFramework::Perpendicular}) {
        const auto rows = negativity_sweep(0.6, 1.0, {0.0, 4.0, 0.5}, fw);
        for (const auto& r : rows) {
            CHECK(r.particle_particle == doctest::Approx(std::abs(std::sin(1.2)) / 3.0).epsilon(1e-12));
            CHECK(r.linear_entropy == doctest::Approx(std::pow(std::sin(1.2), 2)).epsilon(1e-12));
        }
    }
}

TEST_CASE("spin-spin entanglement peaks in the centre-of-momentum frame") {
    const auto rows = negativity_sweep(pi / 4, 1.0, {0.0, 2.0, 0.01}, BoostFramework::Parallel);
    std::size_t best = 0;
    for (std::size_t i = 0; i < rows.size(); ++i)
        if (rows[i].set.s1s2 > rows[best].set.s1s2) best = i;
    CHECK(rows[best].omega == doctest::Approx(0.5));
}

TEST_CASE("delta means") {
    const auto rows = delta_mean_negativities(pi / 4, 1.0, {0.0, 2.0, 0.5}, BoostFramework::Parallel);
    REQUIRE(rows.size() == 5);
    for (double d : rows[0].dn) CHECK(d == 0.0);
    for (double d : rows[2].dn) CHECK(std::abs(d) < 1e-12);  // omega = xi0
    // Perpendicular boosts from the CoM: one-vs-rest mean grows.
    const auto perp = delta_mean_negativities(pi / 4, 0.5, {0.0, 3.0, 0.5}, BoostFramework::Perpendicular);
    for (std::size_t i = 1; i < perp.size(); ++i) CHECK(perp[i].dn[0] > perp[i - 1].dn[0]);
}

TEST_CASE("rapidity grid") {
    CHECK(RapidityGrid{}.points().size() == 401);
    CHECK(RapidityGrid{0.0, 4.0, 0.25}.points().size() == 17);
    CHECK(RapidityGrid{1.0, 1.0, 0.1}.points() == std::vector<double>{1.0});
    CHECK(RapidityGrid{0.0, 1.0, 0.3}.points().back() == doctest::Approx(0.9));
    CHECK_THROWS_AS((void)RapidityGrid({0.0, 1.0, 0.0}).points(), InvalidArgument);
    CHECK_THROWS_AS((void)RapidityGrid({1.0, 0.0, 0.1}).points(), InvalidArgument);
    CHECK_THROWS_AS((void)RapidityGrid({0.0, NAN, 0.1}).points(), InvalidArgument);
}

TEST_CASE("sweeps are deterministic") {
    const auto a = negativity_sweep(0.5, 1.0, {0.0, 4.0, 0.1}, BoostFramework::Perpendicular);
    const auto b = negativity_sweep(0.5, 1.0, {0.0, 4.0, 0.1}, BoostFramework::Perpendicular);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i].set.values() == b[i].set.values());
}

}  // TEST_SUITE
