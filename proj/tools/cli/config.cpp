// Copyright 2026 The bispinor Authors
// SPDX-License-Identifier: Apache-2.0

#include "config.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>
#include <utility>

namespace bispinor::cli {

namespace {

constexpr std::array<std::pair<Scenario, std::string_view>, 7> kScenarioNames{{
    {Scenario::Fig1MeanVsTheta, "fig1_mean_vs_theta"},
    {Scenario::ParallelNegativities, "parallel_negativities"},
    {Scenario::ParallelDeltaMeans, "parallel_delta_means"},
    {Scenario::PerpNegativities, "perp_negativities"},
    {Scenario::PerpDeltaMeans, "perp_delta_means"},
    {Scenario::EggTray, "eggtray"},
    {Scenario::SpinSpinProjectionVsTrace, "spinspin_projection_vs_trace"},
}};

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

std::optional<double> parse_number(std::string_view s) {
    s = trim(s);
    if (s.empty()) return std::nullopt;
    if (s.front() == '+') s.remove_prefix(1);
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
    return v;
}

// "[coef][*]pi" or a plain number.
std::optional<double> parse_term(std::string_view s) {
    s = trim(s);
    double sign = 1.0;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        if (s.front() == '-') sign = -1.0;
        s = trim(s.substr(1));
    }
    if (s.size() >= 2 && s.substr(s.size() - 2) == "pi") {
        std::string_view coef = trim(s.substr(0, s.size() - 2));
        if (!coef.empty() && coef.back() == '*') coef = trim(coef.substr(0, coef.size() - 1));
        double c = 1.0;
        if (!coef.empty()) {
            const auto v = parse_number(coef);
            if (!v) return std::nullopt;
            c = *v;
        }
        return sign * c * std::numbers::pi;
    }
    const auto v = parse_number(s);
    if (!v) return std::nullopt;
    return sign * *v;
}

double require_angle(const std::string& field, const std::string& text) {
    try {
        return parse_angle(text);
    } catch (const InvalidArgument& e) {
        throw ConfigError(field, e.what());
    }
}

std::string json_scalar(const nlohmann::json& v, const std::string& field) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_number()) {
        std::ostringstream os;
        os.precision(17);
        os << v.get<double>();
        return os.str();
    }
    throw ConfigError(field, "expected a number or string");
}

}  // namespace

std::string_view to_string(Scenario s) noexcept {
    for (const auto& [k, name] : kScenarioNames)
        if (k == s) return name;
    return "unknown";
}

std::optional<Scenario> scenario_from_string(std::string_view name) noexcept {
    for (const auto& [k, n] : kScenarioNames)
        if (n == name) return k;
    return std::nullopt;
}

ScenarioConfig::ScenarioConfig()
    : theta(std::numbers::pi / 4), alpha(std::numbers::pi / 4), delta(std::numbers::pi / 4) {}

double ScenarioConfig::effective_xi0() const {
    if (xi0) return *xi0;
    return scenario == Scenario::ParallelNegativities || scenario == Scenario::ParallelDeltaMeans ? 1.0 : 0.5;
}

std::string ScenarioConfig::effective_output_path() const {
    return output_path.empty() ? std::string(to_string(scenario)) + ".csv" : output_path;
}

double parse_angle(std::string_view text) {
    const std::string_view s = trim(text);
    const auto slash = s.find('/');
    std::optional<double> value;
    if (slash == std::string_view::npos) {
        value = parse_term(s);
    } else {
        const auto num = parse_term(s.substr(0, slash));
        const auto den = parse_number(s.substr(slash + 1));
        if (num && den && *den != 0.0) value = *num / *den;
    }
    if (!value || !std::isfinite(*value)) throw InvalidArgument("cannot parse '" + std::string(text) + "' as a number");
    return *value;
}

RapidityGrid parse_grid(std::string_view text) {
    std::array<double, 3> parts{};
    std::size_t count = 0;
    std::string_view rest = text;
    while (true) {
        const auto colon = rest.find(':');
        if (count == 3) throw InvalidArgument("grid '" + std::string(text) + "' must be start:stop:step");
        parts[count++] = parse_angle(rest.substr(0, colon));
        if (colon == std::string_view::npos) break;
        rest = rest.substr(colon + 1);
    }
    if (count != 3) throw InvalidArgument("grid '" + std::string(text) + "' must be start:stop:step");
    return {parts[0], parts[1], parts[2]};
}

ConfigOverrides overrides_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw ConfigError("config", "top-level JSON value must be an object");
    ConfigOverrides o;
    for (const auto& [key, value] : j.items()) {
        if (key == "scenario") {
            if (!value.is_string()) throw ConfigError("scenario", "expected a string");
            o.scenario = value.get<std::string>();
        } else if (key == "theta") {
            o.theta = json_scalar(value, key);
        } else if (key == "alpha") {
            o.alpha = json_scalar(value, key);
        } else if (key == "xi0") {
            o.xi0 = json_scalar(value, key);
        } else if (key == "delta") {
            o.delta = json_scalar(value, key);
        } else if (key == "mass") {
            o.mass = json_scalar(value, key);
        } else if (key == "output_path") {
            if (!value.is_string()) throw ConfigError("output_path", "expected a string");
            o.output_path = value.get<std::string>();
        } else if (key == "omega_grid") {
            if (value.is_string()) {
                o.omega_grid = value.get<std::string>();
            } else if (value.is_array() && value.size() == 3) {
                o.omega_grid = json_scalar(value[0], key) + ":" + json_scalar(value[1], key) + ":" +
                               json_scalar(value[2], key);
            } else if (value.is_object() && value.contains("start") && value.contains("stop") &&
                       value.contains("step")) {
                o.omega_grid = json_scalar(value["start"], key) + ":" + json_scalar(value["stop"], key) + ":" +
                               json_scalar(value["step"], key);
            } else {
                throw ConfigError("omega_grid", "expected \"start:stop:step\", [start, stop, step] or an object");
            }
        } else {
            throw ConfigError(key, "unknown config field");
        }
    }
    return o;
}

ConfigOverrides load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open config file '" + path + "'");
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError("config", std::string("malformed JSON: ") + e.what());
    }
    return overrides_from_json(j);
}

ConfigOverrides merge(const ConfigOverrides& base, const ConfigOverrides& top) {
    ConfigOverrides out = base;
    auto take = [](auto& dst, const auto& src) {
        if (src) dst = src;
    };
    take(out.scenario, top.scenario);
    take(out.theta, top.theta);
    take(out.alpha, top.alpha);
    take(out.xi0, top.xi0);
    take(out.omega_grid, top.omega_grid);
    take(out.delta, top.delta);
    take(out.mass, top.mass);
    take(out.output_path, top.output_path);
    return out;
}

ScenarioConfig resolve(const ConfigOverrides& o) {
    ScenarioConfig c;
    if (!o.scenario) throw ConfigError("scenario", "no scenario given");
    const auto sc = scenario_from_string(*o.scenario);
    if (!sc) throw ConfigError("scenario", "unknown scenario '" + *o.scenario + "'");
    c.scenario = *sc;
    if (o.theta) c.theta = require_angle("theta", *o.theta);
    if (o.alpha) c.alpha = require_angle("alpha", *o.alpha);
    if (o.xi0) c.xi0 = require_angle("xi0", *o.xi0);
    if (o.delta) c.delta = require_angle("delta", *o.delta);
    if (o.mass) c.mass = require_angle("mass", *o.mass);
    if (o.output_path) c.output_path = *o.output_path;
    if (o.omega_grid) {
        try {
            c.omega_grid = parse_grid(*o.omega_grid);
        } catch (const InvalidArgument& e) {
            throw ConfigError("omega_grid", e.what());
        }
    }
    validate(c);
    return c;
}

void validate(const ScenarioConfig& c) {
    if (!std::isfinite(c.theta)) throw ConfigError("theta", "must be finite");
    if (!std::isfinite(c.alpha)) throw ConfigError("alpha", "must be finite");
    if (!std::isfinite(c.delta)) throw ConfigError("delta", "must be finite");
    if (!(c.mass > 0.0) || !std::isfinite(c.mass)) throw ConfigError("mass", "must be positive");
    const double xi0 = c.effective_xi0();
    if (!std::isfinite(xi0) || xi0 < 0.0) throw ConfigError("xi0", "must be a non-negative rapidity");
    if (c.scenario == Scenario::SpinSpinProjectionVsTrace && !(xi0 > 0.0))
        throw ConfigError("xi0", "momentum superposition needs xi0 > 0");
    if (c.scenario == Scenario::EggTray && (c.delta < 0.0 || c.delta >= std::numbers::pi / 2))
        throw ConfigError("delta", "Wigner angle must lie in [0, pi/2)");
    const auto& g = c.omega_grid;
    if (!std::isfinite(g.start) || !std::isfinite(g.stop) || !std::isfinite(g.step))
        throw ConfigError("omega_grid", "bounds must be finite");
    if (!(g.step > 0.0)) throw ConfigError("omega_grid", "step must be positive");
    if (g.stop < g.start) throw ConfigError("omega_grid", "grid is empty (stop < start)");
}

}  // namespace bispinor::cli
