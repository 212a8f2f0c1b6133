// Copyright 2026 The bispinor Authors
// SPDX-License-Identifier: Apache-2.0

#include "verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>

#include "bispinor/bispinor.hpp"

namespace bispinor::cli {

namespace {

constexpr double pi = std::numbers::pi;
constexpr std::uint64_t kSeed = 20260415;

CheckResult check(std::string name, double deviation, double tolerance, std::string detail = {}) {
    const bool ok = std::isfinite(deviation) && deviation < tolerance;
    return {std::move(name), deviation, tolerance, ok, std::move(detail)};
}

std::string fmt(const char* pattern, double a, double b = 0.0) {
    char buf[160];
    std::snprintf(buf, sizeof buf, pattern, a, b);
    return buf;
}

double sech(double x) { return 1.0 / std::cosh(x); }

// Reference negativities for the parallel framework, written out independently of the library.
std::array<double, 7> reference_parallel(double theta, double xi0, double omega, double perturbation) {
    const double s = std::abs(std::sin(2.0 * theta)) * (1.0 + perturbation);
    const double c = sech(omega) * sech(omega - xi0);
    return {s, s, std::abs(std::tanh(omega)) * s, std::abs(std::tanh(omega - xi0)) * s, c * s,
            std::sqrt(1.0 - c * c) * s / 3.0, 0.0};
}

std::vector<double> range(double start, double stop, double step) {
    return RapidityGrid{start, stop, step}.points();
}

Vec3 random_direction(std::mt19937_64& rng) {
    std::normal_distribution<double> g;
    while (true) {
        const Vec3 v{g(rng), g(rng), g(rng)};
        const double l = length(v);
        if (l > 1e-3) return {v[0] / l, v[1] / l, v[2] / l};
    }
}

// Spinor orthonormality and u/v orthogonality at a handful of momenta, in both spin bases.
CheckResult spinor_orthonormality() {
    std::mt19937_64 rng(kSeed);
    std::vector<FourMomentum> momenta{FourMomentum::at_rest(1.0), FourMomentum::from_rapidity(1.0, 1.0),
                                      FourMomentum::from_rapidity(1.0, 2.5, {0.0, 0.0, -1.0})};
    for (int i = 0; i < 4; ++i) momenta.push_back(FourMomentum::from_rapidity(1.0, 0.3 + 0.6 * i, random_direction(rng)));
    double dev = 0.0;
    for (const SpinBasis basis : {SpinBasis::ZAxis, SpinBasis::Helicity}) {
        for (const auto& p : momenta) {
            if (basis == SpinBasis::Helicity && length(p.momentum()) == 0.0) continue;
            for (int s : {+1, -1}) {
                for (int r : {+1, -1}) {
                    const double delta = s == r ? 1.0 : 0.0;
                    const Bispinor us = bispinor_u(p, s, basis), ur = bispinor_u(p, r, basis);
                    const Bispinor vs = bispinor_v(p, s, basis), vr = bispinor_v(p, r, basis);
                    dev = std::max({dev, std::abs(inner(us, ur) - delta), std::abs(inner(vs, vr) - delta),
                                    std::abs(inner(us, vr)), std::abs(inner(vs, ur))});
                }
            }
        }
    }
    return check("spinor orthonormality", dev, 1e-10);
}

CheckResult dirac_algebra() {
    const ComplexMatrix id = ComplexMatrix::identity(4);
    double dev = 0.0;
    for (int i = 0; i < 3; ++i) {
        const ComplexMatrix ai = dirac_alpha(i);
        for (int j = 0; j < 3; ++j) {
            const ComplexMatrix aj = dirac_alpha(j);
            dev = std::max(dev, max_abs_diff(ai * aj + aj * ai, (i == j ? 2.0 : 0.0) * id));
        }
        dev = std::max(dev, max_abs_diff(ai * dirac_beta() + dirac_beta() * ai, ComplexMatrix(4, 4)));
    }
    dev = std::max(dev, max_abs_diff(dirac_beta() * dirac_beta(), id));
    return check("Dirac anticommutation relations", dev, 1e-10);
}

CheckResult boost_composition() {
    std::mt19937_64 rng(kSeed + 1);
    std::uniform_real_distribution<double> w(-2.0, 2.0);
    double dev = 0.0;
    for (int i = 0; i < 20; ++i) {
        const Vec3 n = random_direction(rng);
        const double w1 = w(rng), w2 = w(rng);
        const auto b1 = BoostParams::make(w1, n), b2 = BoostParams::make(w2, n), b12 = BoostParams::make(w1 + w2, n);
        dev = std::max(dev, max_abs_diff(boost_bispinor_matrix(b1) * boost_bispinor_matrix(b2),
                                         boost_bispinor_matrix(b12)));
        const FourMomentum p = FourMomentum::from_rapidity(1.0, 0.7, random_direction(rng));
        const FourMomentum a = boost_four_momentum(boost_four_momentum(p, b2), b1);
        const FourMomentum b = boost_four_momentum(p, b12);
        const double scale = std::max(1.0, b.e);
        dev = std::max({dev, std::abs(a.e - b.e) / scale, std::abs(a.px - b.px) / scale,
                        std::abs(a.py - b.py) / scale, std::abs(a.pz - b.pz) / scale});
    }
    return check("boost composition", dev, 1e-10);
}

CheckResult wigner_round_trip() {
    const WignerParams w = rapidities_for_wigner_angle(pi / 4);
    const double expected_omega = std::acosh(1.0 + std::numbers::sqrt2);
    const double dev = std::max(std::abs(wigner_angle(w.xi0, w.omega) - pi / 4), std::abs(w.omega - expected_omega));
    return check("Wigner angle round trip at pi/4", dev, 1e-10, fmt("omega=%.13f", w.omega));
}

CheckResult closed_form(const std::vector<double>& thetas, const std::vector<double>& xis,
                        const std::vector<double>& omegas, double perturbation, std::string name) {
    double dev = 0.0;
    for (double theta : thetas) {
        for (double xi0 : xis) {
            const auto [p, q] = parallel_framework(xi0);
            const StateVector psi = build_bell_state(p, q, theta).psi;
            for (double omega : omegas) {
                const auto got = negativity_set(apply_boost({psi, p, q, theta, 1.0},
                                                            framework_boost(BoostFramework::Parallel, omega)).psi)
                                     .values();
                const auto want = reference_parallel(theta, xi0, omega, perturbation);
                for (std::size_t k = 0; k < got.size(); ++k) dev = std::max(dev, std::abs(got[k] - want[k]));
            }
        }
    }
    return check(std::move(name), dev, 1e-9);
}

CheckResult particle_invariance(int samples, std::string name) {
    std::mt19937_64 rng(kSeed + 2);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    double spread = 0.0, el_dev = 0.0;
    for (int i = 0; i < samples; ++i) {
        const double theta = pi * u(rng), xi0 = 2.0 * u(rng), omega_max = 3.0 * u(rng);
        const Vec3 n = random_direction(rng);
        const auto [p, q] = com_framework(xi0);
        const TwoParticleState s0 = build_bell_state(p, q, theta);
        double nmin = 1e300, nmax = -1e300, emin = 1e300, emax = -1e300;
        for (int k = 0; k <= 6; ++k) {
            const TwoParticleState s = apply_boost(s0, BoostParams::make(omega_max * k / 6.0, n));
            const double neg = particle_particle_negativity(s.psi);
            const double el = particle_linear_entropy(s.psi);
            nmin = std::min(nmin, neg), nmax = std::max(nmax, neg);
            emin = std::min(emin, el), emax = std::max(emax, el);
            el_dev = std::max(el_dev, std::abs(el - std::pow(std::sin(2.0 * theta), 2)));
        }
        spread = std::max({spread, nmax - nmin, emax - emin});
    }
    CheckResult r = check(std::move(name), std::max(spread, el_dev), 1e-9,
                          fmt("trajectory spread %.3g, |E_L - sin^2 2theta| %.3g", spread, el_dev));
    r.passed = spread < 1e-9 && el_dev < 1e-10;
    return r;
}

CheckResult spin_rest_invariance() {
    double dev_par = 0.0, dev_perp = 0.0;
    for (double theta : {0.0, pi / 8, pi / 4, 3 * pi / 8}) {
        for (double xi0 : {0.0, 0.5, 1.0, 2.0}) {
            for (const BoostFramework fw : {BoostFramework::Parallel, BoostFramework::Perpendicular}) {
                for (const auto& row : negativity_sweep(theta, xi0, {0.0, 4.0, 0.25}, fw)) {
                    const double d = std::abs(row.set.s1_rest - std::abs(std::sin(2.0 * theta)));
                    (fw == BoostFramework::Parallel ? dev_par : dev_perp) = std::max(
                        fw == BoostFramework::Parallel ? dev_par : dev_perp, d);
                }
            }
        }
    }
    return check("[3] spin one-vs-rest invariance", std::max(dev_par, dev_perp), 1e-9,
                 fmt("parallel %.3g, perpendicular %.3g", dev_par, dev_perp));
}

CheckResult rest_frame_zero() {
    double dev = 0.0;
    for (double theta : {0.0, pi / 8, pi / 4, 3 * pi / 8}) {
        for (double xi0 : {0.5, 1.0, 2.0}) {
            const RapidityGrid at{xi0, xi0, 1.0};
            dev = std::max(dev, negativity_sweep(theta, xi0, at, BoostFramework::Parallel)[0].set.p2_rest);
            for (double d : delta_mean_negativities(theta, xi0, at, BoostFramework::Parallel)[0].dn)
                dev = std::max(dev, std::abs(d));
        }
    }
    return check("[4] rest-frame zero at omega = xi0", dev, 1e-10);
}

CheckResult com_extremum() {
    const auto rows = negativity_sweep(pi / 4, 1.0, {0.0, 4.0, 0.01}, BoostFramework::Parallel);
    const auto best = std::max_element(rows.begin(), rows.end(),
                                       [](const auto& a, const auto& b) { return a.set.s1s2 < b.set.s1s2; });
    const double dev = std::abs(best->omega - 0.5);
    return check("[5] spin-spin maximum at the CoM rapidity", dev, 0.01 + 1e-12, fmt("argmax omega=%.4f", best->omega));
}

CheckResult parity_parity_vanishing() {
    double dev = 0.0;
    for (double theta : {0.0, pi / 8, pi / 4, 3 * pi / 8}) {
        for (double xi0 : {0.0, 0.5, 1.0, 2.0}) {
            for (const auto& row : negativity_sweep(theta, xi0, {0.0, 4.0, 0.01}, BoostFramework::Parallel))
                dev = std::max(dev, row.set.p1p2);
        }
    }
    return check("[6] parity-parity negativity vanishes", dev, 1e-10);
}

CheckResult fig1_shape() {
    constexpr int steps = 180;
    const auto [p, q] = com_framework(0.5);
    std::vector<std::array<double, 4>> means(steps + 1);
    for (int i = 0; i <= steps; ++i) {
        const auto m = mean_negativities(build_bell_state(p, q, pi * i / steps).psi);
        means[i] = {m.n1, m.n2, m.n3, m.n4};
    }
    double zero_dev = 0.0;
    int worst_offset = 0;
    for (int k = 0; k < 4; ++k) {
        for (int i : {0, steps / 2, steps}) zero_dev = std::max(zero_dev, means[i][k]);
        for (auto [lo, hi, peak] : {std::array<int, 3>{0, steps / 2, steps / 4}, {steps / 2, steps, 3 * steps / 4}}) {
            int arg = lo;
            for (int i = lo; i <= hi; ++i)
                if (means[i][k] > means[arg][k]) arg = i;
            worst_offset = std::max(worst_offset, std::abs(arg - peak));
        }
    }
    CheckResult r = check("[7] mean negativities vs theta", zero_dev, 1e-10,
                          fmt("peak offset %.0f grid steps, max value at zeros %.3g", static_cast<double>(worst_offset), zero_dev));
    r.passed = r.passed && worst_offset <= 1;
    return r;
}

CheckResult spin_momentum_non_creation() {
    double dev = 0.0;
    for (int a = 0; a <= 8; ++a) {
        for (int t = 0; t <= 8; ++t) {
            const SixQubitState s0 = build_superposed(1.0, pi * a / 8, pi * t / 8);
            for (double omega : {0.0, 0.5, 1.0, 2.0}) {
                const auto n = spin_momentum_negativities(
                    trace_out_parity(boost_superposed(s0, framework_boost(BoostFramework::Perpendicular, omega))));
                dev = std::max({dev, n.s1_rest, n.s1s2_k1k2});
            }
        }
    }
    return check("[8] no spin-momentum entanglement after tracing parity", dev, 1e-9);
}

std::vector<CheckResult> projection_path() {
    const auto omegas = range(0.0, 3.0, 0.1);
    auto projected = [](double xi0, double alpha, double theta, double omega) {
        const SixQubitState s = boost_superposed(build_superposed(xi0, alpha, theta),
                                                 framework_boost(BoostFramework::Perpendicular, omega));
        return std::pair{spin_momentum_negativities(project_positive_parity(s)),
                         spin_momentum_negativities(trace_out_parity(s))};
    };
    double edge = 0.0, symmetry = 0.0, flat = 0.0, rise = -1e300, variation = 0.0;
    for (double xi0 : {0.5, 1.0}) {
        for (int t = 0; t <= 8; ++t) {
            const double theta = pi * t / 8;
            for (double omega : {0.0, 0.5, 1.0, 2.0}) {
                edge = std::max({edge, projected(xi0, 0.0, theta, omega).first.s1s2_k1k2,
                                 projected(xi0, pi / 2, theta, omega).first.s1s2_k1k2});
                for (int a = 1; a < 4; ++a) {
                    const double alpha = pi * a / 8;
                    symmetry = std::max(symmetry, std::abs(projected(xi0, alpha, theta, omega).first.s1s2_k1k2 -
                                                           projected(xi0, pi / 2 - alpha, theta, omega).first.s1s2_k1k2));
                }
            }
        }
        double lo = 1e300, hi = -1e300, prev_traced = 0.0, ss_lo = 1e300, ss_hi = -1e300;
        for (std::size_t i = 0; i < omegas.size(); ++i) {
            const auto [proj, traced] = projected(xi0, pi / 4, pi / 4, omegas[i]);
            lo = std::min(lo, proj.s1s2_k1k2), hi = std::max(hi, proj.s1s2_k1k2);
            ss_lo = std::min(ss_lo, proj.s1_s2), ss_hi = std::max(ss_hi, proj.s1_s2);
            if (i > 0) rise = std::max(rise, traced.s1_s2 - prev_traced);
            prev_traced = traced.s1_s2;
        }
        variation = std::max(variation, hi - lo);
        flat = std::max(flat, ss_hi - ss_lo);
    }
    std::vector<CheckResult> out;
    out.push_back(check("[9a] projected N(S1S2;k1k2) vanishes at alpha in {0, pi/2}", edge, 1e-9));
    out.push_back(check("[9b] projected N(S1S2;k1k2) symmetric under alpha -> pi/2 - alpha", symmetry, 1e-9));
    CheckResult nc{"[9c] projected N(S1S2;k1k2) varies with omega at alpha = theta = pi/4", variation, 1e-9,
                   variation > 1e-9, fmt("spread over omega %.3g (must exceed %.0e)", variation, 1e-9)};
    out.push_back(nc);
    out.push_back(check("[9d] projected spin-spin negativity constant in omega", flat, 1e-9));
    CheckResult dec{"[9e] traced spin-spin negativity strictly decreasing", rise, 0.0, rise < 0.0,
                    fmt("largest step-to-step change %.3g", rise)};
    out.push_back(dec);
    return out;
}

}  // namespace

std::vector<CheckResult> verify(const VerifyOptions& options) {
    const double eps = options.perturbation;
    std::vector<CheckResult> out;
    auto guarded = [&](const std::string& name, const std::function<void()>& fn) {
        try {
            fn();
        } catch (const std::exception& e) {
            out.push_back({name, INFINITY, 0.0, false, std::string("threw: ") + e.what()});
        }
    };
    if (options.level == VerifyLevel::Fast) {
        guarded("spinor orthonormality", [&] { out.push_back(spinor_orthonormality()); });
        guarded("Dirac anticommutation relations", [&] { out.push_back(dirac_algebra()); });
        guarded("boost composition", [&] { out.push_back(boost_composition()); });
        guarded("Wigner angle round trip", [&] { out.push_back(wigner_round_trip()); });
        guarded("closed-form agreement (coarse)", [&] {
            out.push_back(closed_form({pi / 8, pi / 4}, {0.5, 1.0}, range(0.0, 4.0, 1.0), eps,
                                      "closed-form agreement (coarse)"));
        });
        guarded("particle-particle invariance (sample)",
                [&] { out.push_back(particle_invariance(10, "particle-particle invariance (sample)")); });
        return out;
    }
    guarded("[1] closed-form agreement", [&] {
        out.push_back(closed_form({0.0, pi / 8, pi / 4, 3 * pi / 8}, {0.0, 0.5, 1.0, 2.0}, range(0.0, 4.0, 0.25), eps,
                                  "[1] closed-form agreement"));
    });
    guarded("[2] particle-particle invariance",
            [&] { out.push_back(particle_invariance(100, "[2] particle-particle invariance")); });
    guarded("[3] spin one-vs-rest invariance", [&] { out.push_back(spin_rest_invariance()); });
    guarded("[4] rest-frame zero", [&] { out.push_back(rest_frame_zero()); });
    guarded("[5] CoM extremum", [&] { out.push_back(com_extremum()); });
    guarded("[6] parity-parity vanishing", [&] { out.push_back(parity_parity_vanishing()); });
    guarded("[7] mean negativities vs theta", [&] { out.push_back(fig1_shape()); });
    guarded("[8] spin-momentum non-creation", [&] { out.push_back(spin_momentum_non_creation()); });
    guarded("[9] projection path", [&] {
        for (auto& r : projection_path()) out.push_back(std::move(r));
    });
    guarded("[10] kinematics", [&] {
        for (auto r : {spinor_orthonormality(), dirac_algebra(), boost_composition(), wigner_round_trip()}) {
            r.name = "[10] " + r.name;
            out.push_back(std::move(r));
        }
    });
    return out;
}

std::string format_report(const std::vector<CheckResult>& results) {
    std::string out;
    char buf[320];
    for (const auto& r : results) {
        std::snprintf(buf, sizeof buf, "[%s] %-66s max_dev=%-10.3g tol=%-8.1e", r.passed ? "PASS" : "FAIL",
                      r.name.c_str(), r.max_deviation, r.tolerance);
        out += buf;
        if (!r.detail.empty()) out += "  " + r.detail;
        out += '\n';
    }
    const auto passed = std::count_if(results.begin(), results.end(), [](const auto& r) { return r.passed; });
    std::snprintf(buf, sizeof buf, "%zu/%zu checks passed\n", static_cast<std::size_t>(passed), results.size());
    out += buf;
    return out;
}

bool all_passed(const std::vector<CheckResult>& results) {
    return std::all_of(results.begin(), results.end(), [](const auto& r) { return r.passed; });
}

}  // namespace bispinor::cli
