// Copyright 2026 The bispinor Authors
// SPDX-License-Identifier: Apache-2.0

#include <iostream>

#include <CLI11.hpp>

#include "config.hpp"
#include "run.hpp"
#include "verify.hpp"

namespace {

enum Exit : int { kOk = 0, kVerifyFailed = 1, kConfigError = 2, kIoError = 3 };

}  // namespace

int main(int argc, char** argv) {
    using namespace bispinor::cli;

    CLI::App app{"Entanglement of boosted Dirac bispinors: scenario sweeps and self-checks"};
    app.require_subcommand(1);

    ConfigOverrides flags;
    std::string config_path;
    auto* run_cmd = app.add_subcommand("run", "Sweep a scenario and write CSV");
    auto opt = [&](const char* name, std::optional<std::string>& slot, const char* help) {
        run_cmd->add_option_function<std::string>(name, [&slot](const std::string& v) { slot = v; }, help);
    };
    opt("--scenario", flags.scenario,
        "fig1_mean_vs_theta | parallel_negativities | parallel_delta_means | perp_negativities | "
        "perp_delta_means | eggtray | spinspin_projection_vs_trace");
    opt("--theta", flags.theta, "Spin superposition angle (radians, pi fractions allowed)");
    opt("--alpha", flags.alpha, "Momentum superposition angle");
    opt("--xi0", flags.xi0, "Initial rapidity");
    opt("--omega", flags.omega_grid, "Boost rapidity grid start:stop:step");
    opt("--delta", flags.delta, "Wigner angle (eggtray)");
    opt("--mass", flags.mass, "Particle mass");
    opt("--out", flags.output_path, "Output CSV path");
    run_cmd->add_option("--config", config_path, "JSON config; flags override its values");

    bool full = false;
    double perturb = 0.0;
    auto* verify_cmd = app.add_subcommand("verify", "Run the invariant suites");
    verify_cmd->add_flag("--full", full, "Run every acceptance suite");
    verify_cmd->add_option("--perturb-reference", perturb)->group("");  // negative control

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kConfigError;
    }

    if (*verify_cmd) {
        const auto results = verify({full ? VerifyLevel::Full : VerifyLevel::Fast, perturb});
        std::cout << format_report(results);
        return all_passed(results) ? kOk : kVerifyFailed;
    }

    try {
        ConfigOverrides merged = flags;
        if (!config_path.empty()) merged = merge(load_config_file(config_path), flags);
        std::cout << run(resolve(merged)) << '\n';
        return kOk;
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kConfigError;
    } catch (const IoError& e) {
        std::cerr << "I/O error: " << e.what() << '\n';
        return kIoError;
    } catch (const bispinor::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kConfigError;
    }
}
