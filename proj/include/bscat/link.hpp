// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 bscat authors
//
// Uplink model for one sub-region: the hovering UAV illuminates the nodes
// with a carrier, each node backscatters a fraction zeta of what it
// receives, and the UAV decodes all nodes of the sub-region jointly with
// successive interference cancellation (power-domain NOMA). The two-way
// channel through path loss d^-alpha and log-normal shadowing gain h enters
// the received backscatter power as h^2 d^-2alpha.

#pragma once

#include <cstddef>
#include <vector>

#include "bscat/config.hpp"

namespace bscat {

/// Per-node link state within a sub-region, in SIC decode order.
struct LinkRecord {
    int node_id = -1;
    double distance = 0.0;    ///< slant range to the serving waypoint
    double zeta = 0.0;        ///< assigned reflection coefficient
    double shadow_gain = 1.0; ///< linear one-way shadowing gain h

    /// Deterministic part of the received backscatter power (h = 1),
    /// normalized by the carrier power: zeta * d^-2alpha.
    double combined_gain(double alpha) const;
};

/// One realized sub-region: SIC-ordered records plus radio constants.
struct SubregionRealization {
    std::vector<LinkRecord> records;
    double p_u_w = 0.0;
    double noise_w = 0.0;
    double alpha = 2.7;
};

/// Radio/model constants shared by the analytic chain and the Monte Carlo
/// oracle, pre-converted to linear units.
struct LinkParams {
    double p_u_w = 0.0;
    double noise_w = 0.0;
    double alpha = 2.7;
    double sigma_db = 0.0; ///< shadowing standard deviation in dB
    double gamma_linear = 1.0;

    static LinkParams from(const NetworkConfig& cfg);
};

/// One-way received power p_u * h * d^-alpha.
/// Throws std::domain_error if d <= 0.
double received_power(double p_u_w, double h, double d, double alpha);

/// Power re-radiated by a node: zeta * p_rx.
/// Throws std::domain_error if zeta is outside (0, 1).
double backscatter_power(double zeta, double p_rx);

/// Reflection coefficients by SIC rank (rank 0 = closest node).
/// Equal-interval: equally spaced over [zeta_min, zeta_max], largest first;
/// a single node gets zeta_max. Uniform: every node gets zeta_min, so the
/// interference-limited positions are coefficient-free and the two schemes
/// share the same noise-limited last position.
std::vector<double> assign_reflection_coeffs(std::size_t n, double zeta_min, double zeta_max,
                                             Scheme scheme);

/// Sort records into SIC decode order: ascending distance, ties by node id.
/// Decode order is fixed by this assignment, not by realized channel gains.
void sic_order(std::vector<LinkRecord>& records);

/// SINR of the record at `position` (0-based) under SIC: already-decoded
/// stronger signals are removed, so the denominator is the sum of the weaker
/// signals plus thermal noise (noise alone at the last position).
double sinr(const SubregionRealization& sr, std::size_t position);

/// Per-position decode flags (sinr >= gamma) and the joint success flag.
struct DecodeResult {
    std::vector<bool> success;
    bool joint = true;
};

DecodeResult decode_subregion(const SubregionRealization& sr, double gamma_linear);

} // namespace bscat
