// Copyright 2026 The bispinor Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file superposition.hpp
 * @brief Two bispinors with a dichotomic momentum qubit each.
 *
 * Register order is (P1, S1, k1, P2, S2, k2): parity, spin and momentum per
 * particle. The momentum qubit encodes |1> = p (along +e_z) and |0> = q = -p,
 * treated as exactly orthonormal. Reduced states over (S1, k1, S2, k2) are
 * indexed 0..3 in that order.
 */

#pragma once

#include <vector>

#include "bispinor/dirac.hpp"
#include "bispinor/tensor.hpp"

namespace bispinor {

namespace qubit6 {
inline constexpr std::size_t P1 = 0;
inline constexpr std::size_t S1 = 1;
inline constexpr std::size_t K1 = 2;
inline constexpr std::size_t P2 = 3;
inline constexpr std::size_t S2 = 4;
inline constexpr std::size_t K2 = 5;
}  // namespace qubit6

/// Qubit positions in the parity-free reduced register (S1, k1, S2, k2).
namespace spin_momentum {
inline constexpr std::size_t S1 = 0;
inline constexpr std::size_t K1 = 1;
inline constexpr std::size_t S2 = 2;
inline constexpr std::size_t K2 = 3;
}  // namespace spin_momentum

struct SixQubitState {
    StateVector psi;
    FourMomentum p;
    FourMomentum q;
    double alpha = 0.0;
    double theta = 0.0;
    double mass = 1.0;
};

/**
 * cos(alpha) [cos(theta) u(p,+) u(q,-) + sin(theta) u(p,-) u(q,+)] |1>_1 |0>_2
 * + sin(alpha) [cos(theta) u(q,+) u(p,-) + sin(theta) u(q,-) u(p,+)] |0>_1 |1>_2,
 * normalized numerically, with CoM momenta p = -q of rapidity xi0 along e_z.
 * Throws DegenerateMomenta for xi0 <= 0.
 */
SixQubitState build_superposed(double xi0, double alpha, double theta, double mass = 1.0);

/// Applies S (x) I_k to each particle and renormalizes.
SixQubitState boost_superposed(const SixQubitState& state, const BoostParams& b);

/// Pi+ rho Pi+ / Tr[Pi+ rho] with both parities projected on |+>, parities then traced.
ComplexMatrix project_positive_parity(const SixQubitState& state);

/// Tr_{P1,P2} |psi><psi|
ComplexMatrix trace_out_parity(const SixQubitState& state);

/// Negativities of a (S1, k1, S2, k2) density matrix.
struct SpinMomentumNegativities {
    double s1_rest = 0.0;     ///< {S1; k1 S2 k2}
    double s1s2_k1k2 = 0.0;   ///< {S1 S2; k1 k2}
    double s1_s2 = 0.0;       ///< {S1; S2}
};

SpinMomentumNegativities spin_momentum_negativities(const ComplexMatrix& rho);

struct WignerParams {
    double xi0 = 0.0;
    double omega = 0.0;
    double delta = 0.0;
    bool asymptotic = false;  ///< true when delta is within 1e-3 of pi/2 and (10, 10) was returned
};

/// atan(sinh xi0 sinh omega / (cosh xi0 + cosh omega))
double wigner_angle(double xi0, double omega);

/// Symmetric rapidities xi0 = omega realizing delta; throws UnreachableAngle for delta >= pi/2.
WignerParams rapidities_for_wigner_angle(double delta);

}  // namespace bispinor
