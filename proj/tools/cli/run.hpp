// Copyright 2026 The bispinor Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

#include "config.hpp"

namespace bispinor::cli {

struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<double>> rows;
};

/// Evaluates a scenario; the first column is the swept variable.
CsvTable compute_scenario(const ScenarioConfig& config);

/// Header plus rows, "%.12g" numbers, '\n' line endings.
std::string format_csv(const CsvTable& table);

/// Computes, writes the CSV and returns the one-line summary. Throws IoError.
std::string run(const ScenarioConfig& config);

}  // namespace bispinor::cli
