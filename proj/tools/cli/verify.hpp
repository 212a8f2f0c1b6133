// Copyright 2026 The bispinor Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

namespace bispinor::cli {

enum class VerifyLevel { Fast, Full };

struct CheckResult {
    std::string name;
    double max_deviation = 0.0;
    double tolerance = 0.0;
    bool passed = false;
    std::string detail;
};

struct VerifyOptions {
    VerifyLevel level = VerifyLevel::Fast;
    /// Relative error injected into the closed-form reference values. Nonzero only for the negative control.
    double perturbation = 0.0;
};

/// Runs the suites sequentially; never throws for a failing check.
std::vector<CheckResult> verify(const VerifyOptions& options);

std::string format_report(const std::vector<CheckResult>& results);

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace bispinor::cli
