// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 bscat authors

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bscat/common.hpp"

namespace bscat {

/// Reflection-coefficient assignment scheme for the nodes of a sub-region.
enum class Scheme {
    EqualInterval, ///< coefficients equally spaced over [zeta_min, zeta_max], highest to the closest node
    Uniform,       ///< every node uses the same coefficient (zeta_min)
};

std::string to_string(Scheme s);
Scheme scheme_from_string(const std::string& s);

/// Full scenario description: network, radio and experiment parameters.
///
/// Defaults describe the reference scenario used throughout the test suite:
/// 40 nodes over a hexagonal area of circumradius 100 m, 60 degree
/// illumination cone, 20 dBm carrier, -70 dBm noise floor, 64 bit/s
/// backscatter rate, -3 dB SINR threshold, path-loss exponent 2.7,
/// reflection coefficients in [0.1, 0.99], at most 12 sub-regions and
/// 8 dB shadowing variance.
struct NetworkConfig {
    int n_nodes = 40;             ///< number of backscatter nodes (N)
    double theta_deg = 60.0;      ///< effective illumination angle in degrees
    double p_u_dbm = 20.0;        ///< UAV carrier power in dBm
    double noise_dbm = -70.0;     ///< noise power in dBm
    double rate_bps = 64.0;       ///< backscatter bit rate in bit/s
    double cov_radius_m = 100.0;  ///< target-area circumradius in metres
    double gamma_db = -3.0;       ///< SINR decoding threshold in dB
    double alpha = 2.7;           ///< path-loss exponent
    double zeta_min = 0.1;        ///< smallest reflection coefficient
    double zeta_max = 0.99;       ///< largest reflection coefficient
    int w_max = 12;               ///< largest admissible number of sub-regions
    double shadow_var_db = 8.0;   ///< log-normal shadowing variance in dB
    double subslot_s = 1.0;       ///< hover time per sub-region in seconds
    std::uint64_t seed = 1;       ///< RNG seed for placement/synthesis/shadowing
    std::uint64_t trials = 100000; ///< Monte Carlo trials per estimate
    Scheme scheme = Scheme::EqualInterval;
    std::vector<double> altitude_set = {86.71, 80.71, 72.21, 64.21, 58.21,
                                        52.71, 48.21, 44.21, 43.71, 43.21};

    // Derived views used by the numeric modules.
    double theta_rad() const { return theta_deg * kPi / 180.0; }
    double p_u_w() const { return dbm_to_watts(p_u_dbm); }
    double noise_w() const { return dbm_to_watts(noise_dbm); }
    double gamma_linear() const { return db_to_linear(gamma_db); }
    double shadow_sigma_db() const; ///< shadowing standard deviation, sqrt(shadow_var_db)

    /// Throws config_error naming the offending field and bound.
    void validate() const;
};

/// Built-in defaults (same as value-initialized NetworkConfig).
NetworkConfig default_config();

/// Apply one "key=value" override; throws config_error for unknown keys or bad values.
void apply_override(NetworkConfig& cfg, const std::string& key, const std::string& value);

/// Load a flat key-value config file ('#' comments, "key = value" lines),
/// then apply overrides in order, then validate. An empty path means
/// "defaults only". Unknown keys are rejected with the line number.
NetworkConfig load_config(const std::string& path, const std::vector<std::string>& overrides = {});

/// Parse overrides of the form "key=value"; throws config_error otherwise.
void apply_override_expr(NetworkConfig& cfg, const std::string& expr);

} // namespace bscat
