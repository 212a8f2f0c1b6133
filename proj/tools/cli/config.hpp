// Copyright 2026 The bispinor Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "bispinor/errors.hpp"
#include "bispinor/scenarios.hpp"

namespace bispinor::cli {

enum class Scenario {
    Fig1MeanVsTheta,
    ParallelNegativities,
    ParallelDeltaMeans,
    PerpNegativities,
    PerpDeltaMeans,
    EggTray,
    SpinSpinProjectionVsTrace,
};

std::string_view to_string(Scenario s) noexcept;
std::optional<Scenario> scenario_from_string(std::string_view name) noexcept;

/// Invalid configuration; `field()` names the offending ScenarioConfig field.
class ConfigError : public Error {
public:
    ConfigError(std::string field, const std::string& message)
        : Error(field + ": " + message), field_(std::move(field)) {}
    [[nodiscard]] const std::string& field() const noexcept { return field_; }

private:
    std::string field_;
};

class IoError : public Error {
public:
    using Error::Error;
};

struct ScenarioConfig {
    Scenario scenario = Scenario::ParallelNegativities;
    double theta = 0.0;
    double alpha = 0.0;
    /// Unset means the scenario default (1 for the parallel framework, 1/2 otherwise).
    std::optional<double> xi0;
    RapidityGrid omega_grid{0.0, 4.0, 0.01};
    double delta = 0.0;
    double mass = 1.0;
    /// Empty means "<scenario>.csv" in the working directory.
    std::string output_path;

    ScenarioConfig();
    [[nodiscard]] double effective_xi0() const;
    [[nodiscard]] std::string effective_output_path() const;
};

/// Unset fields of a partially specified config (flags or JSON).
struct ConfigOverrides {
    std::optional<std::string> scenario;
    std::optional<std::string> theta;
    std::optional<std::string> alpha;
    std::optional<std::string> xi0;
    std::optional<std::string> omega_grid;
    std::optional<std::string> delta;
    std::optional<std::string> mass;
    std::optional<std::string> output_path;
};

/// Real number or pi-fraction literal: "0.5", "1/2", "pi", "-pi/8", "3pi/4", "3*pi/4".
double parse_angle(std::string_view text);

/// "start:stop:step"; each part accepts parse_angle syntax.
RapidityGrid parse_grid(std::string_view text);

/// Reads a JSON object whose keys mirror ScenarioConfig field names.
ConfigOverrides overrides_from_json(const nlohmann::json& j);
ConfigOverrides load_config_file(const std::string& path);

/// `top` wins over `base` field by field.
ConfigOverrides merge(const ConfigOverrides& base, const ConfigOverrides& top);

/// Parses and validates; throws ConfigError naming the field.
ScenarioConfig resolve(const ConfigOverrides& o);

void validate(const ScenarioConfig& c);

}  // namespace bispinor::cli
