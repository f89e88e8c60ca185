// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 bscat authors
//
// Throughput objective and exhaustive altitude optimization. The network
// throughput at altitude H is the successfully decoded bits per frame over
// the frame duration W*T; with per-sub-region bits N_l T R (1 - outage_l)
// the hover time T cancels exactly, leaving (R / W) * sum_l N_l (1 -
// outage_l). The optimizer evaluates every altitude of a finite set, skips
// the ones whose tiling violates the sub-region budget, and returns the
// argmax (ties go to the higher altitude: same throughput, shorter frame).

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "bscat/config.hpp"
#include "bscat/scenario.hpp"

namespace bscat {

/// Outage estimator selection. Geometry is identical in both modes; only
/// the per-sub-region outage source differs.
enum class Mode {
    Analytic, ///< closed-form log-normal chain
    Mc,       ///< Monte Carlo with cfg.trials shadowing draws
};

std::string to_string(Mode mode);
Mode mode_from_string(const std::string& s);

/// Bits successfully collected from one sub-region: n_l * t * rate * (1 - outage).
double subregion_bits(int n_l, double t_s, double rate_bps, double outage);

/// One evaluated altitude.
struct SweepRow {
    double altitude = 0.0;
    int w = 0;
    std::vector<int> n_l;              ///< per sub-region, visit order
    std::vector<double> outage;        ///< per sub-region
    std::vector<double> bits;          ///< per sub-region, uses cfg.subslot_s
    double throughput_bps = 0.0;
    double throughput_std_err = 0.0;   ///< 0 in analytic mode
};

/// Sweep outcome: evaluated rows plus the altitudes that were skipped
/// because their tiling violates the sub-region budget.
struct AltitudeSweep {
    std::vector<SweepRow> rows;
    std::vector<std::pair<double, std::string>> skipped; ///< (altitude, reason)
};

/// Evaluate one altitude: tiling, instances, per-sub-region outage, bits and
/// throughput. Throws infeasible_error when the tiling needs more than
/// cfg.w_max sub-regions.
SweepRow evaluate_altitude(double h, const NetworkConfig& cfg, Mode mode,
                           Layout layout = Layout::Balanced);

/// Throughput at one altitude; hover time T cancels and is never used.
double network_throughput(double h, const NetworkConfig& cfg, Mode mode);

/// Evaluate every altitude, collecting infeasible ones under `skipped`.
AltitudeSweep sweep_altitudes(std::span<const double> altitudes, const NetworkConfig& cfg,
                              Mode mode);

/// Best altitude plus the full sweep behind it.
struct Optimum {
    double h_star = 0.0;
    double c_star_bps = 0.0;
    AltitudeSweep sweep;
};

/// Exhaustive search over cfg.altitude_set. Throws infeasible_error when no
/// altitude is feasible. Ties prefer the higher altitude.
Optimum optimize_altitude(const NetworkConfig& cfg, Mode mode);

/// Rebuild the altitude set for an illumination angle: for every achievable
/// sub-region count k in 1..cfg.w_max, pick the footprint radius in the
/// middle of the (longest) radius interval where the tiling yields exactly
/// k sub-regions, and convert it to the altitude r / tan(theta/2). Counts
/// that no radius interval produces are omitted, as are counts achieved
/// only on a degenerate knife-edge interval (a layout transition point):
/// those would flip under a 1-ulp altitude change. Returned in decreasing
/// altitude (increasing k) order.
std::vector<double> altitude_set_for_theta(double theta_deg, const NetworkConfig& cfg);

/// One point of the illumination-angle sweep.
struct ThetaSweepRow {
    double theta_deg = 0.0;
    int n_nodes = 0;
    double h_star = 0.0;
    double throughput_bps = 0.0;
};

/// Optimized throughput per (theta, node count): the altitude set is
/// regenerated per theta, then the standard exhaustive search runs.
std::vector<ThetaSweepRow> sweep_theta(std::span<const double> theta_values,
                                       std::span<const int> n_values, const NetworkConfig& cfg,
                                       Mode mode);

/// One point of the per-sub-region node-count sweep.
struct NlSweepRow {
    int n_l = 0;
    double alpha = 0.0;
    double h_opt = 0.0;
    double bits = 0.0; ///< expected bits collected from the sub-region
};

/// Expected bits from a standalone sub-region with n_l nodes, at the
/// per-point best altitude over a 1 m grid from 20 m up to the highest
/// configured altitude. The expectation averages the outage over
/// independent node-placement draws (closed-form chain per draw).
std::vector<NlSweepRow> sweep_nl(std::span<const int> nl_values,
                                 std::span<const double> alpha_values, const NetworkConfig& cfg);

/// Paired altitude sweeps for the two reflection-coefficient schemes over
/// identical geometry (and, in mc mode, identical shadowing draws).
struct SchemeSweep {
    AltitudeSweep equal_interval;
    AltitudeSweep uniform;
};

SchemeSweep sweep_zeta_scheme(const NetworkConfig& cfg, Mode mode);

} // namespace bscat
