// Copyright 2026 The bispinor Authors
// SPDX-License-Identifier: Apache-2.0

#include "bispinor/scenarios.hpp"

#include <cmath>

#include "bispinor/errors.hpp"
#include "bispinor/parallel.hpp"

namespace bispinor {

namespace {

double sech(double x) { return 1.0 / std::cosh(x); }

StateVector product(const Bispinor& a, const Bispinor& b) { return kron(a.state(), b.state()); }

StateVector boost_pair(const StateVector& psi, const BoostParams& b) {
    const ComplexMatrix s = boost_bispinor_matrix(b);
    return normalize(apply_local(apply_local(psi, s, qubit4::P1), s, qubit4::P2));
}

}  // namespace

const std::vector<std::string>& four_qubit_names() {
    static const std::vector<std::string> names{"P1", "S1", "P2", "S2"};
    return names;
}

Bipartition four_qubit_partition(QubitSubset side_a, QubitSubset side_b) {
    return {4, std::move(side_a), std::move(side_b)};
}

TwoParticleState build_bell_state(const FourMomentum& p, const FourMomentum& q, double theta, double mass) {
    using std::cos, std::sin;
    StateVector psi = Complex(cos(theta)) * product(bispinor_u(p, +1, SpinBasis::ZAxis, mass),
                                                    bispinor_u(q, -1, SpinBasis::ZAxis, mass)) +
                      Complex(sin(theta)) * product(bispinor_u(p, -1, SpinBasis::ZAxis, mass),
                                                    bispinor_u(q, +1, SpinBasis::ZAxis, mass));
    return {normalize(psi), p, q, theta, mass};
}

MomentumPair parallel_framework(double xi0, double mass) {
    if (!(xi0 >= 0.0)) throw InvalidArgument("parallel_framework: xi0 must be non-negative");
    return {FourMomentum::at_rest(mass), {mass * std::cosh(-xi0), 0.0, 0.0, mass * std::sinh(-xi0)}};
}

MomentumPair com_framework(double xi0, double mass) {
    if (!(xi0 >= 0.0)) throw InvalidArgument("com_framework: xi0 must be non-negative");
    return {{mass * std::cosh(xi0), 0.0, 0.0, mass * std::sinh(xi0)},
            {mass * std::cosh(-xi0), 0.0, 0.0, mass * std::sinh(-xi0)}};
}

MomentumPair framework_momenta(BoostFramework fw, double xi0, double mass) {
    return fw == BoostFramework::Parallel ? parallel_framework(xi0, mass) : com_framework(xi0, mass);
}

BoostParams framework_boost(BoostFramework fw, double omega) {
    return fw == BoostFramework::Parallel ? BoostParams::make(omega, {0.0, 0.0, 1.0})
                                          : BoostParams::make(omega, {1.0, 0.0, 0.0});
}

TwoParticleState apply_boost(const TwoParticleState& state, const BoostParams& b) {
    return {boost_pair(state.psi, b), boost_four_momentum(state.p, b), boost_four_momentum(state.q, b),
            state.theta, state.mass};
}

// ------------------------------------------------------------- NegativitySet

std::array<double, 7> NegativitySet::values() const {
    return {s1_rest, s2_rest, p1_rest, p2_rest, s1s2, p1p2_s1s2, p1p2};
}

const std::array<const char*, 7>& NegativitySet::column_names() {
    static const std::array<const char*, 7> names{"neg_S1_rest", "neg_S2_rest",    "neg_P1_rest", "neg_P2_rest",
                                                  "neg_S1_S2",   "neg_P1P2_S1S2", "neg_P1_P2"};
    return names;
}

NegativitySet negativity_set(const StateVector& psi) {
    using namespace qubit4;
    auto neg = [&](QubitSubset a, QubitSubset b) { return negativity(psi, four_qubit_partition(std::move(a), std::move(b))); };
    NegativitySet out;
    out.s1_rest = neg({S1}, {P1, P2, S2});
    out.s2_rest = neg({S2}, {P1, P2, S1});
    out.p1_rest = neg({P1}, {P2, S1, S2});
    out.p2_rest = neg({P2}, {P1, S1, S2});
    out.s1s2 = neg({S1}, {S2});
    out.p1p2_s1s2 = neg({P1, P2}, {S1, S2});
    out.p1p2 = neg({P1}, {P2});
    return out;
}

NegativitySet closed_form_parallel(double theta, double xi0, double omega) {
    const double s2t = std::abs(std::sin(2.0 * theta));
    const double sech_prod = sech(omega) * sech(omega - xi0);
    NegativitySet out;
    out.s1_rest = s2t;
    out.s2_rest = s2t;
    out.p1p2_s1s2 = std::sqrt(std::max(0.0, 1.0 - sech_prod * sech_prod)) * s2t / 3.0;
    out.p1_rest = std::abs(std::tanh(omega) * s2t);
    out.s1s2 = sech_prod * s2t;
    out.p2_rest = std::abs(std::tanh(omega - xi0) * s2t);
    out.p1p2 = 0.0;
    return out;
}

double particle_particle_negativity(const StateVector& psi) {
    using namespace qubit4;
    return negativity(psi, four_qubit_partition({P1, S1}, {P2, S2}));
}

double particle_linear_entropy(const StateVector& psi) {
    return linear_entropy(psi, QubitSubset{qubit4::P1, qubit4::S1});
}

// -------------------------------------------------------------------- sweeps

std::vector<double> RapidityGrid::points() const {
    if (!std::isfinite(start) || !std::isfinite(stop) || !std::isfinite(step))
        throw InvalidArgument("RapidityGrid: bounds must be finite");
    if (!(step > 0.0)) throw InvalidArgument("RapidityGrid: step must be positive");
    if (stop < start) throw InvalidArgument("RapidityGrid: stop is below start");
    const auto count = static_cast<std::size_t>(std::floor((stop - start) / step + 1e-9)) + 1;
    std::vector<double> pts(count);
    for (std::size_t i = 0; i < count; ++i) pts[i] = start + static_cast<double>(i) * step;
    return pts;
}

std::vector<NegativityRow> negativity_sweep(double theta, double xi0, const RapidityGrid& grid,
                                            BoostFramework fw, double mass) {
    const auto omegas = grid.points();
    const auto [p, q] = framework_momenta(fw, xi0, mass);
    const TwoParticleState initial = build_bell_state(p, q, theta, mass);
    std::vector<NegativityRow> rows(omegas.size());
    parallel_for(omegas.size(), [&](std::size_t i) {
        const StateVector psi = boost_pair(initial.psi, framework_boost(fw, omegas[i]));
        rows[i] = {omegas[i], negativity_set(psi), particle_particle_negativity(psi), particle_linear_entropy(psi)};
    });
    return rows;
}

std::vector<DeltaMeanRow> delta_mean_negativities(double theta, double xi0, const RapidityGrid& grid,
                                                  BoostFramework fw, double mass) {
    const auto omegas = grid.points();
    const auto [p, q] = framework_momenta(fw, xi0, mass);
    const TwoParticleState initial = build_bell_state(p, q, theta, mass);
    const MeanNegativities base = mean_negativities(initial.psi);
    std::vector<DeltaMeanRow> rows(omegas.size());
    parallel_for(omegas.size(), [&](std::size_t i) {
        const MeanNegativities m = mean_negativities(boost_pair(initial.psi, framework_boost(fw, omegas[i])));
        rows[i] = {omegas[i], {m.n1 - base.n1, m.n2 - base.n2, m.n3 - base.n3, m.n4 - base.n4}};
    });
    return rows;
}

}  // namespace bispinor
