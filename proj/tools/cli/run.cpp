// Copyright 2026 The bispinor Authors
// SPDX-License-Identifier: Apache-2.0

#include "run.hpp"

#include <cstdio>
#include <fstream>
#include <numbers>

#include "bispinor/measures.hpp"
#include "bispinor/parallel.hpp"
#include "bispinor/scenarios.hpp"
#include "bispinor/superposition.hpp"

namespace bispinor::cli {

namespace {

constexpr std::size_t kThetaIntervals = 180;   // fig1: 1 degree resolution on [0, pi]
constexpr std::size_t kEggTrayIntervals = 40;  // eggtray: pi/40 on [0, pi] per axis

CsvTable fig1(const ScenarioConfig& c) {
    CsvTable t{{"theta", "N1", "N2", "N3", "N4"}, {}};
    const auto [p, q] = com_framework(c.effective_xi0(), c.mass);
    t.rows.resize(kThetaIntervals + 1);
    parallel_for(t.rows.size(), [&](std::size_t i) {
        const double theta = std::numbers::pi * static_cast<double>(i) / kThetaIntervals;
        const auto m = mean_negativities(build_bell_state(p, q, theta, c.mass).psi);
        t.rows[i] = {theta, m.n1, m.n2, m.n3, m.n4};
    });
    return t;
}

CsvTable negativities(const ScenarioConfig& c, BoostFramework fw) {
    CsvTable t;
    t.header.emplace_back("omega");
    for (const char* name : NegativitySet::column_names()) t.header.emplace_back(name);
    t.header.emplace_back("neg_P1S1_P2S2");
    t.header.emplace_back("EL");
    for (const auto& r : negativity_sweep(c.theta, c.effective_xi0(), c.omega_grid, fw, c.mass)) {
        std::vector<double> row{r.omega};
        for (double v : r.set.values()) row.push_back(v);
        row.push_back(r.particle_particle);
        row.push_back(r.linear_entropy);
        t.rows.push_back(std::move(row));
    }
    return t;
}

CsvTable delta_means(const ScenarioConfig& c, BoostFramework fw) {
    CsvTable t{{"omega", "dN1", "dN2", "dN3", "dN4"}, {}};
    for (const auto& r : delta_mean_negativities(c.theta, c.effective_xi0(), c.omega_grid, fw, c.mass))
        t.rows.push_back({r.omega, r.dn[0], r.dn[1], r.dn[2], r.dn[3]});
    return t;
}

CsvTable eggtray(const ScenarioConfig& c) {
    CsvTable t{{"alpha", "theta", "neg_S1_p1S2p2_projected", "neg_S1S2_p1p2_projected", "neg_S1_p1S2p2_traced",
                "neg_S1S2_p1p2_traced"},
               {}};
    const WignerParams w = rapidities_for_wigner_angle(c.delta);
    const BoostParams boost = framework_boost(BoostFramework::Perpendicular, w.omega);
    constexpr std::size_t side = kEggTrayIntervals + 1;
    t.rows.resize(side * side);
    parallel_for(t.rows.size(), [&](std::size_t idx) {
        const double alpha = std::numbers::pi * static_cast<double>(idx / side) / kEggTrayIntervals;
        const double theta = std::numbers::pi * static_cast<double>(idx % side) / kEggTrayIntervals;
        const SixQubitState s = boost_superposed(build_superposed(w.xi0, alpha, theta, c.mass), boost);
        const auto proj = spin_momentum_negativities(project_positive_parity(s));
        const auto traced = spin_momentum_negativities(trace_out_parity(s));
        t.rows[idx] = {alpha, theta, proj.s1_rest, proj.s1s2_k1k2, traced.s1_rest, traced.s1s2_k1k2};
    });
    return t;
}

CsvTable spinspin(const ScenarioConfig& c) {
    CsvTable t{{"omega", "neg_S1_S2_projected", "neg_S1_S2_traced", "neg_S1S2_p1p2_projected",
                "neg_S1S2_p1p2_traced"},
               {}};
    const SixQubitState initial = build_superposed(c.effective_xi0(), c.alpha, c.theta, c.mass);
    const auto omegas = c.omega_grid.points();
    t.rows.resize(omegas.size());
    parallel_for(omegas.size(), [&](std::size_t i) {
        const SixQubitState s =
            boost_superposed(initial, framework_boost(BoostFramework::Perpendicular, omegas[i]));
        const auto proj = spin_momentum_negativities(project_positive_parity(s));
        const auto traced = spin_momentum_negativities(trace_out_parity(s));
        t.rows[i] = {omegas[i], proj.s1_s2, traced.s1_s2, proj.s1s2_k1k2, traced.s1s2_k1k2};
    });
    return t;
}

}  // namespace

CsvTable compute_scenario(const ScenarioConfig& config) {
    validate(config);
    switch (config.scenario) {
        case Scenario::Fig1MeanVsTheta: return fig1(config);
        case Scenario::ParallelNegativities: return negativities(config, BoostFramework::Parallel);
        case Scenario::ParallelDeltaMeans: return delta_means(config, BoostFramework::Parallel);
        case Scenario::PerpNegativities: return negativities(config, BoostFramework::Perpendicular);
        case Scenario::PerpDeltaMeans: return delta_means(config, BoostFramework::Perpendicular);
        case Scenario::EggTray: return eggtray(config);
        case Scenario::SpinSpinProjectionVsTrace: return spinspin(config);
    }
    throw ConfigError("scenario", "unhandled scenario");
}

std::string format_csv(const CsvTable& table) {
    std::string out;
    for (std::size_t i = 0; i < table.header.size(); ++i) {
        if (i) out += ',';
        out += table.header[i];
    }
    out += '\n';
    char buf[32];
    for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out += ',';
            // Collapse -0 so identical physics prints identically.
            const double v = row[i] == 0.0 ? 0.0 : row[i];
            std::snprintf(buf, sizeof buf, "%.12g", v);
            out += buf;
        }
        out += '\n';
    }
    return out;
}

std::string run(const ScenarioConfig& config) {
    const CsvTable table = compute_scenario(config);
    const std::string path = config.effective_output_path();
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    out << format_csv(table);
    out.close();
    if (!out) throw IoError("failed writing '" + path + "'");
    return "scenario=" + std::string(to_string(config.scenario)) + " rows=" + std::to_string(table.rows.size()) +
           " columns=" + std::to_string(table.header.size()) + " output=" + path;
}

}  // namespace bispinor::cli
