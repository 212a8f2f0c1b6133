// Copyright 2026 The bispinor Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file scenarios.hpp
 * @brief Two-particle bispinor states on the register (P1, S1, P2, S2) and
 *        the parallel / perpendicular boost frameworks.
 *
 * Parallel framework: particle 1 at rest, particle 2 with rapidity xi0 along
 * -e_z; the boost pushes momenta along +e_z (the new frame moves along -e_z),
 * so particle 2 ends up with rapidity omega - xi0.
 * Perpendicular framework: centre-of-momentum pair along +-e_z with rapidity
 * xi0 each; the boost acts along e_x.
 */

#pragma once

#include <array>
#include <string>
#include <vector>

#include "bispinor/dirac.hpp"
#include "bispinor/measures.hpp"
#include "bispinor/tensor.hpp"

namespace bispinor {

namespace qubit4 {
inline constexpr std::size_t P1 = 0;
inline constexpr std::size_t S1 = 1;
inline constexpr std::size_t P2 = 2;
inline constexpr std::size_t S2 = 3;
}  // namespace qubit4

const std::vector<std::string>& four_qubit_names();

/// Bipartition of the (P1, S1, P2, S2) register.
Bipartition four_qubit_partition(QubitSubset side_a, QubitSubset side_b);

struct MomentumPair {
    FourMomentum p;
    FourMomentum q;
};

struct TwoParticleState {
    StateVector psi;
    FourMomentum p;
    FourMomentum q;
    double theta = 0.0;
    double mass = 1.0;
};

enum class BoostFramework { Parallel, Perpendicular };

/// cos(theta) u(p,+) (x) u(q,-) + sin(theta) u(p,-) (x) u(q,+), normalized, z-axis spins.
TwoParticleState build_bell_state(const FourMomentum& p, const FourMomentum& q, double theta,
                                  double mass = 1.0);

/// p = (m, 0, 0, 0), q = (m cosh xi0, 0, 0, -m sinh xi0).
MomentumPair parallel_framework(double xi0, double mass = 1.0);
/// p = (m cosh xi0, 0, 0, m sinh xi0), q = (m cosh xi0, 0, 0, -m sinh xi0).
MomentumPair com_framework(double xi0, double mass = 1.0);

MomentumPair framework_momenta(BoostFramework fw, double xi0, double mass = 1.0);
/// Parallel: +e_z. Perpendicular: +e_x.
BoostParams framework_boost(BoostFramework fw, double omega);

/// psi' = normalize((S (x) S) psi); momentum labels follow boost_four_momentum.
TwoParticleState apply_boost(const TwoParticleState& state, const BoostParams& b);

/// Named negativities of a four-qubit state.
struct NegativitySet {
    double s1_rest = 0.0;     ///< {S1; P1 P2 S2}
    double s2_rest = 0.0;     ///< {S2; P1 P2 S1}
    double p1_rest = 0.0;     ///< {P1; P2 S1 S2}
    double p2_rest = 0.0;     ///< {P2; P1 S1 S2}
    double s1s2 = 0.0;        ///< {S1; S2}
    double p1p2_s1s2 = 0.0;   ///< {P1 P2; S1 S2}
    double p1p2 = 0.0;        ///< {P1; P2}

    /// Field values in declaration order, with matching CSV column names.
    [[nodiscard]] std::array<double, 7> values() const;
    static const std::array<const char*, 7>& column_names();
};

NegativitySet negativity_set(const StateVector& psi);

/// Analytic negativities of the parallel-boosted Bell-like state.
NegativitySet closed_form_parallel(double theta, double xi0, double omega);

/// {P1 S1; P2 S2}
double particle_particle_negativity(const StateVector& psi);
/// 2 (1 - Tr rho_1^2) for the reduction onto particle 1.
double particle_linear_entropy(const StateVector& psi);

/// Inclusive grid start, start + step, ... <= stop (+ 1e-9 slack).
struct RapidityGrid {
    double start = 0.0;
    double stop = 4.0;
    double step = 0.01;

    /// Throws InvalidArgument if step <= 0, bounds are not finite or stop < start.
    [[nodiscard]] std::vector<double> points() const;
};

struct NegativityRow {
    double omega = 0.0;
    NegativitySet set;
    double particle_particle = 0.0;
    double linear_entropy = 0.0;
};

std::vector<NegativityRow> negativity_sweep(double theta, double xi0, const RapidityGrid& grid,
                                            BoostFramework fw, double mass = 1.0);

struct DeltaMeanRow {
    double omega = 0.0;
    std::array<double, 4> dn{};  ///< dN^(1) .. dN^(4)
};

/// N^(k)[psi'] - N^(k)[psi] along the grid, in grid order.
std::vector<DeltaMeanRow> delta_mean_negativities(double theta, double xi0, const RapidityGrid& grid,
                                                  BoostFramework fw, double mass = 1.0);

}  // namespace bispinor
