// Copyright 2026 The bispinor Authors
// SPDX-License-Identifier: Apache-2.0

#include "bispinor/superposition.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "bispinor/errors.hpp"
#include "bispinor/measures.hpp"

namespace bispinor {

namespace {

constexpr double kAsymptoticWindow = 1e-3;
constexpr double kAsymptoticRapidity = 10.0;

StateVector momentum_qubit(int bit) { return StateVector::basis(1, static_cast<std::size_t>(bit)); }

// u_a (x) |k_a> (x) u_b (x) |k_b>
StateVector branch(const Bispinor& a, int ka, const Bispinor& b, int kb) {
    return kron(kron(a.state(), momentum_qubit(ka)), kron(b.state(), momentum_qubit(kb)));
}

const QubitSubset& spin_momentum_qubits() {
    static const QubitSubset keep{qubit6::S1, qubit6::K1, qubit6::S2, qubit6::K2};
    return keep;
}

}  // namespace

SixQubitState build_superposed(double xi0, double alpha, double theta, double mass) {
    if (!(xi0 > 0.0))
        throw DegenerateMomenta("build_superposed: xi0 must be positive so that p != q, got " + std::to_string(xi0));
    const FourMomentum p{mass * std::cosh(xi0), 0.0, 0.0, mass * std::sinh(xi0)};
    const FourMomentum q{mass * std::cosh(xi0), 0.0, 0.0, -mass * std::sinh(xi0)};
    auto u = [&](const FourMomentum& k, int s) { return bispinor_u(k, s, SpinBasis::ZAxis, mass); };

    const double ca = std::cos(alpha), sa = std::sin(alpha);
    const double ct = std::cos(theta), st = std::sin(theta);
    StateVector psi = Complex(ca * ct) * branch(u(p, +1), 1, u(q, -1), 0) +
                      Complex(ca * st) * branch(u(p, -1), 1, u(q, +1), 0) +
                      Complex(sa * ct) * branch(u(q, +1), 0, u(p, -1), 1) +
                      Complex(sa * st) * branch(u(q, -1), 0, u(p, +1), 1);
    return {normalize(psi), p, q, alpha, theta, mass};
}

SixQubitState boost_superposed(const SixQubitState& state, const BoostParams& b) {
    const ComplexMatrix s = boost_bispinor_matrix(b);
    StateVector psi = apply_local(apply_local(state.psi, s, qubit6::P1), s, qubit6::P2);
    return {normalize(psi), boost_four_momentum(state.p, b), boost_four_momentum(state.q, b), state.alpha,
            state.theta, state.mass};
}

ComplexMatrix project_positive_parity(const SixQubitState& state) {
    const std::size_t n = state.psi.num_qubits();
    const std::size_t odd_parity = QubitSubset{qubit6::P1, qubit6::P2}.mask(n);
    StateVector projected = state.psi;
    double weight = 0.0;
    for (std::size_t i = 0; i < projected.dimension(); ++i) {
        if (i & odd_parity)
            projected[i] = 0.0;
        else
            weight += std::norm(projected[i]);
    }
    if (!(weight > 1e-12))
        throw ProjectionAnnihilated("project_positive_parity: positive-parity weight " + std::to_string(weight));
    return partial_trace(normalize(projected), spin_momentum_qubits());
}

ComplexMatrix trace_out_parity(const SixQubitState& state) {
    return partial_trace(state.psi, spin_momentum_qubits());
}

SpinMomentumNegativities spin_momentum_negativities(const ComplexMatrix& rho) {
    using namespace spin_momentum;
    SpinMomentumNegativities out;
    out.s1_rest = negativity(rho, Bipartition(4, {S1}, {K1, S2, K2}));
    out.s1s2_k1k2 = negativity(rho, Bipartition(4, {S1, S2}, {K1, K2}));
    out.s1_s2 = negativity(rho, Bipartition(4, {S1}, {S2}));
    return out;
}

double wigner_angle(double xi0, double omega) {
    return std::atan(std::sinh(xi0) * std::sinh(omega) / (std::cosh(xi0) + std::cosh(omega)));
}

WignerParams rapidities_for_wigner_angle(double delta) {
    constexpr double half_pi = std::numbers::pi / 2.0;
    if (!(delta >= 0.0)) throw InvalidArgument("rapidities_for_wigner_angle: delta must be non-negative");
    if (delta >= half_pi) throw UnreachableAngle("rapidities_for_wigner_angle: delta >= pi/2 is only a limit");
    if (half_pi - delta < kAsymptoticWindow) {
        return {kAsymptoticRapidity, kAsymptoticRapidity,
                wigner_angle(kAsymptoticRapidity, kAsymptoticRapidity), true};
    }
    // xi0 = omega: tan(delta) = (c^2 - 1) / (2c) with c = cosh(omega).
    const double t = std::tan(delta);
    const double c = t + std::sqrt(t * t + 1.0);
    const double omega = std::acosh(c);
    return {omega, omega, delta, false};
}

}  // namespace bispinor
