// Copyright 2026 The bispinor Authors
// SPDX-License-Identifier: Apache-2.0

#include "bispinor/dirac.hpp"

#include <cmath>
#include <string>

#include "bispinor/errors.hpp"

namespace bispinor {

namespace {

constexpr double kShellTolerance = 1e-10;
constexpr double kPhaseThreshold = 1e-14;

void require_spin(int s) {
    if (s != 1 && s != -1) throw InvalidArgument("spin label must be +1 or -1, got " + std::to_string(s));
}

void require_on_shell(const FourMomentum& p, double mass) {
    if (!(mass > 0.0)) throw InvalidArgument("bispinor: mass must be positive");
    if (!(p.e > 0.0)) throw InvalidArgument("bispinor: energy must be positive");
    if (p.shell_defect(mass) > kShellTolerance)
        throw InvalidArgument("bispinor: four-momentum is off the mass shell m = " + std::to_string(mass));
}

using Spinor2 = std::array<Complex, 2>;

Spinor2 spin_state(const FourMomentum& p, int s, SpinBasis basis) {
    if (basis == SpinBasis::Helicity) return helicity_spinor(p.momentum(), s);
    return s > 0 ? Spinor2{1.0, 0.0} : Spinor2{0.0, 1.0};
}

// (p.sigma) chi
Spinor2 p_dot_sigma(const Vec3& p, const Spinor2& chi) {
    const Complex i{0.0, 1.0};
    return {p[2] * chi[0] + (p[0] - i * p[1]) * chi[1],
            (p[0] + i * p[1]) * chi[0] - p[2] * chi[1]};
}

}  // namespace

double dot(const Vec3& a, const Vec3& b) noexcept { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

double length(const Vec3& a) noexcept { return std::sqrt(dot(a, a)); }

// ------------------------------------------------------------- FourMomentum

FourMomentum FourMomentum::on_shell(double mass, const Vec3& p) {
    return {std::sqrt(mass * mass + dot(p, p)), p[0], p[1], p[2]};
}

FourMomentum FourMomentum::from_rapidity(double mass, double xi, const Vec3& dir) {
    const double len = length(dir);
    if (!(len > 0.0)) throw InvalidArgument("from_rapidity: direction must be nonzero");
    const double k = mass * std::sinh(xi) / len;
    return {mass * std::cosh(xi), k * dir[0], k * dir[1], k * dir[2]};
}

double FourMomentum::invariant_mass() const noexcept {
    return std::sqrt(std::max(0.0, e * e - (px * px + py * py + pz * pz)));
}

double FourMomentum::shell_defect(double mass) const noexcept {
    const double p2 = px * px + py * py + pz * pz;
    return std::abs(e * e - p2 - mass * mass) / std::max(1.0, e * e);
}

// -------------------------------------------------------------- BoostParams

BoostParams BoostParams::make(double omega, const Vec3& n) {
    if (!std::isfinite(omega)) throw InvalidArgument("BoostParams: rapidity must be finite");
    if (std::abs(length(n) - 1.0) > 1e-12) throw InvalidArgument("BoostParams: direction must be a unit vector");
    return {omega, n};
}

BoostParams BoostParams::along(double omega, const Vec3& direction) {
    const double len = length(direction);
    if (!(len > 0.0)) throw InvalidArgument("BoostParams: direction must be nonzero");
    return make(omega, {direction[0] / len, direction[1] / len, direction[2] / len});
}

std::string_view to_string(SpinBasis basis) noexcept {
    return basis == SpinBasis::ZAxis ? "z-axis" : "helicity";
}

// ----------------------------------------------------------------- Bispinor

StateVector Bispinor::state() const {
    return StateVector(std::vector<Complex>(amplitudes.begin(), amplitudes.end()));
}

double Bispinor::norm() const {
    double s = 0.0;
    for (const auto& z : amplitudes) s += std::norm(z);
    return std::sqrt(s);
}

Bispinor Bispinor::from_state(const StateVector& v) {
    if (v.dimension() != 4) throw InvalidDimension("Bispinor::from_state: need a two-qubit state");
    return {{v[0], v[1], v[2], v[3]}};
}

Complex inner(const Bispinor& a, const Bispinor& b) {
    Complex s = 0.0;
    for (std::size_t i = 0; i < 4; ++i) s += std::conj(a[i]) * b[i];
    return s;
}

Bispinor canonical_phase(const Bispinor& u) {
    for (const auto& z : u.amplitudes) {
        if (std::abs(z) > kPhaseThreshold) {
            const Complex phase = std::conj(z) / std::abs(z);
            Bispinor out = u;
            for (auto& a : out.amplitudes) a *= phase;
            return out;
        }
    }
    return u;
}

// ----------------------------------------------------------- Dirac matrices

ComplexMatrix pauli_x() { return {{0.0, 1.0}, {1.0, 0.0}}; }

ComplexMatrix pauli_y() {
    const Complex i{0.0, 1.0};
    return {{0.0, -i}, {i, 0.0}};
}

ComplexMatrix pauli_z() { return {{1.0, 0.0}, {0.0, -1.0}}; }

ComplexMatrix dirac_alpha(int i) {
    switch (i) {
        case 0: return kron(pauli_x(), pauli_x());
        case 1: return kron(pauli_x(), pauli_y());
        case 2: return kron(pauli_x(), pauli_z());
        default: throw InvalidArgument("dirac_alpha: index must be 0, 1 or 2");
    }
}

ComplexMatrix dirac_beta() { return kron(pauli_z(), ComplexMatrix::identity(2)); }

ComplexMatrix dirac_hamiltonian(const Vec3& p, double mass) {
    ComplexMatrix h = mass * dirac_beta();
    for (int i = 0; i < 3; ++i) h += p[static_cast<std::size_t>(i)] * dirac_alpha(i);
    return h;
}

// --------------------------------------------------------------- kinematics

double rapidity_from_velocity(double v) {
    if (!(v >= 0.0)) throw InvalidArgument("rapidity_from_velocity: speed must be non-negative");
    if (v >= 1.0) throw SuperluminalInput("rapidity_from_velocity: speed " + std::to_string(v) + " >= 1");
    const double arg = v / std::sqrt(1.0 - v * v);
    if (arg >= 1.0)
        throw SuperluminalInput("rapidity_from_velocity: v/sqrt(1-v^2) >= 1 for v = " + std::to_string(v) +
                                " (formula defined only for v < 1/sqrt(2))");
    return std::atanh(arg);
}

FourMomentum boost_four_momentum(const FourMomentum& p, const BoostParams& b) {
    const double ch = std::cosh(b.omega);
    const double sh = std::sinh(b.omega);
    const Vec3 mom = p.momentum();
    const double np = dot(b.n, mom);
    const double k = (ch - 1.0) * np + sh * p.e;
    return {ch * p.e + sh * np, mom[0] + k * b.n[0], mom[1] + k * b.n[1], mom[2] + k * b.n[2]};
}

// ------------------------------------------------------------------ spinors

std::array<Complex, 2> helicity_spinor(const Vec3& p, int s) {
    require_spin(s);
    const double len = length(p);
    if (!(len > 0.0)) throw DegenerateHelicity("helicity_spinor: momentum direction undefined at p = 0");
    const Vec3 u{p[0] / len, p[1] / len, p[2] / len};

    // Projector (I + s u.sigma)/2 applied to |s>, or to |-s> if that vanishes.
    auto project = [&](const Spinor2& chi) {
        const Spinor2 rot = p_dot_sigma(u, chi);
        return Spinor2{0.5 * (chi[0] + double(s) * rot[0]), 0.5 * (chi[1] + double(s) * rot[1])};
    };
    const Spinor2 up{1.0, 0.0};
    const Spinor2 down{0.0, 1.0};
    Spinor2 chi = project(s > 0 ? up : down);
    double nrm = std::sqrt(std::norm(chi[0]) + std::norm(chi[1]));
    if (nrm < 0.5) {  // the preferred seed has overlap <= 1/2; the other one then has >= 1/2
        const Spinor2 alt = project(s > 0 ? down : up);
        const double alt_nrm = std::sqrt(std::norm(alt[0]) + std::norm(alt[1]));
        if (alt_nrm > nrm) {
            chi = alt;
            nrm = alt_nrm;
        }
    }
    chi[0] /= nrm;
    chi[1] /= nrm;
    const Complex& lead = std::abs(chi[0]) > kPhaseThreshold ? chi[0] : chi[1];
    const Complex phase = std::conj(lead) / std::abs(lead);
    return {chi[0] * phase, chi[1] * phase};
}

Bispinor bispinor_u(const FourMomentum& p, int s, SpinBasis basis, double mass) {
    require_spin(s);
    require_on_shell(p, mass);
    const Spinor2 chi = spin_state(p, s, basis);
    const Spinor2 lower = p_dot_sigma(p.momentum(), chi);
    const double f = std::sqrt((p.e + mass) / (2.0 * p.e));
    const double g = 1.0 / std::sqrt(2.0 * p.e * (p.e + mass));
    return canonical_phase({{f * chi[0], f * chi[1], g * lower[0], g * lower[1]}});
}

Bispinor bispinor_v(const FourMomentum& p, int s, SpinBasis basis, double mass) {
    require_spin(s);
    require_on_shell(p, mass);
    const Spinor2 chi = spin_state(p, s, basis);
    const Spinor2 upper = p_dot_sigma(p.momentum(), chi);
    const double f = std::sqrt((p.e + mass) / (2.0 * p.e));
    const double g = 1.0 / std::sqrt(2.0 * p.e * (p.e + mass));
    return canonical_phase({{-g * upper[0], -g * upper[1], f * chi[0], f * chi[1]}});
}

ComplexMatrix boost_bispinor_matrix(const BoostParams& b) {
    ComplexMatrix s = std::cosh(0.5 * b.omega) * ComplexMatrix::identity(4);
    const double sh = std::sinh(0.5 * b.omega);
    for (int i = 0; i < 3; ++i) {
        const double ni = b.n[static_cast<std::size_t>(i)];
        if (ni != 0.0) s += (sh * ni) * dirac_alpha(i);
    }
    return s;
}

Bispinor boost_bispinor(const Bispinor& u, const BoostParams& b) {
    const ComplexMatrix s = boost_bispinor_matrix(b);
    Bispinor out;
    for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t c = 0; c < 4; ++c) out[r] += s(r, c) * u[c];
    const double nrm = out.norm();
    if (!(nrm > 1e-14)) throw ZeroNorm("boost_bispinor: boosted spinor vanished");
    for (auto& a : out.amplitudes) a /= nrm;
    return out;
}

}  // namespace bispinor
