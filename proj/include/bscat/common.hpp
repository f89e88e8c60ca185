// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 bscat authors

#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace bscat {

inline constexpr double kPi = std::numbers::pi;

/// Raised when a configuration file or override fails to parse or validate.
struct config_error : std::runtime_error {
    explicit config_error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Raised when a requested plan violates the sub-region count constraint,
/// or when no altitude in a sweep is feasible.
struct infeasible_error : std::runtime_error {
    explicit infeasible_error(const std::string& msg) : std::runtime_error(msg) {}
};

/// dBm -> watts.
inline double dbm_to_watts(double dbm) { return 1e-3 * std::pow(10.0, dbm / 10.0); }

/// dB -> linear power ratio.
inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

} // namespace bscat
