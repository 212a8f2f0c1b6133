// Copyright 2026 The bispinor Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file dirac.hpp
 * @brief Kinematics and Dirac-bispinor algebra in natural units (hbar = c = 1).
 *
 * A bispinor is a two-qubit object: the first qubit is intrinsic parity
 * (|+> = upper block, |-> = lower block of the Dirac representation), the
 * second is spin. Dirac matrices factor as alpha_i = sigma_x (x) sigma_i and
 * beta = sigma_z (x) I.
 *
 * Boost convention: BoostParams{omega, n} is an active boost that pushes
 * momenta along +n. Its four-vector matrix is the usual Lambda(omega, n) and
 * its bispinor representation is S = exp(+omega/2 n.alpha); equivalently,
 * the passive transformation to a frame moving with rapidity omega along -n.
 */

#pragma once

#include <array>
#include <string_view>

#include "bispinor/tensor.hpp"

namespace bispinor {

using Vec3 = std::array<double, 3>;

double dot(const Vec3& a, const Vec3& b) noexcept;
double length(const Vec3& a) noexcept;

/// Four-momentum (E, px, py, pz).
struct FourMomentum {
    double e = 1.0;
    double px = 0.0;
    double py = 0.0;
    double pz = 0.0;

    /// On-shell momentum with the given 3-momentum.
    static FourMomentum on_shell(double mass, const Vec3& p);
    /// Momentum of rapidity xi along the unit vector dir: p = m sinh(xi) dir.
    static FourMomentum from_rapidity(double mass, double xi, const Vec3& dir = {0.0, 0.0, 1.0});
    static FourMomentum at_rest(double mass) { return {mass, 0.0, 0.0, 0.0}; }

    [[nodiscard]] Vec3 momentum() const noexcept { return {px, py, pz}; }
    /// sqrt(E^2 - |p|^2)
    [[nodiscard]] double invariant_mass() const noexcept;
    /// |E^2 - |p|^2 - m^2| relative to E^2.
    [[nodiscard]] double shell_defect(double mass) const noexcept;
};

struct BoostParams {
    double omega = 0.0;
    Vec3 n{0.0, 0.0, 1.0};

    /// Validating constructor: |n| = 1 within 1e-12, omega finite.
    static BoostParams make(double omega, const Vec3& n);
    /// Normalizes `direction` before building the boost.
    static BoostParams along(double omega, const Vec3& direction);
};

enum class SpinBasis { ZAxis, Helicity };

std::string_view to_string(SpinBasis basis) noexcept;

/// Four complex amplitudes ordered (P+,S0), (P+,S1), (P-,S0), (P-,S1).
struct Bispinor {
    std::array<Complex, 4> amplitudes{};

    [[nodiscard]] StateVector state() const;
    [[nodiscard]] double norm() const;
    Complex& operator[](std::size_t i) noexcept { return amplitudes[i]; }
    const Complex& operator[](std::size_t i) const noexcept { return amplitudes[i]; }

    static Bispinor from_state(const StateVector& v);
};

Complex inner(const Bispinor& a, const Bispinor& b);

// ------------------------------------------------------------ Dirac matrices

ComplexMatrix pauli_x();
ComplexMatrix pauli_y();
ComplexMatrix pauli_z();
/// alpha_i = sigma_x (x) sigma_i, i in {0, 1, 2} for x, y, z.
ComplexMatrix dirac_alpha(int i);
/// beta = sigma_z (x) I
ComplexMatrix dirac_beta();
/// p.alpha + m beta
ComplexMatrix dirac_hamiltonian(const Vec3& p, double mass);

// ---------------------------------------------------------------- kinematics

/// omega = arctanh(v / sqrt(1 - v^2)); real only for v < 1/sqrt(2).
double rapidity_from_velocity(double v);

FourMomentum boost_four_momentum(const FourMomentum& p, const BoostParams& b);

// ------------------------------------------------------------------ spinors

/// Normalized eigenvector of (p.sigma)/|p| with eigenvalue s = +-1.
std::array<Complex, 2> helicity_spinor(const Vec3& p, int s);

/// Positive-energy bispinor u(p, s); `mass` must match the shell of p.
Bispinor bispinor_u(const FourMomentum& p, int s, SpinBasis basis = SpinBasis::ZAxis,
                    double mass = 1.0);
/// Negative-energy bispinor v(p, s).
Bispinor bispinor_v(const FourMomentum& p, int s, SpinBasis basis = SpinBasis::ZAxis,
                    double mass = 1.0);

/// cosh(omega/2) I + sinh(omega/2) n.alpha. Hermitian, not unitary.
ComplexMatrix boost_bispinor_matrix(const BoostParams& b);

/// S u renormalized by its actual norm.
Bispinor boost_bispinor(const Bispinor& u, const BoostParams& b);

/// Multiplies by the phase making the first non-negligible amplitude real positive.
Bispinor canonical_phase(const Bispinor& u);

}  // namespace bispinor
