// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 bscat authors
//
// Output rendering and atomic file writes. All numbers are serialized as
// the shortest decimal string that parses back to the identical double, so
// identical inputs always produce byte-identical files and every emitted
// value survives a round trip without precision loss.

#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "bscat/config.hpp"
#include "bscat/geometry.hpp"
#include "bscat/optimizer.hpp"

namespace bscat {

/// Shortest decimal representation that round-trips to the same double.
std::string fmt_double(double v);

/// Write content to path via a temporary file and rename, so readers never
/// observe a partial file. Creates parent directories.
void atomic_write(const std::filesystem::path& path, const std::string& content);

/// CSV of (altitude, sub-region count, per-sub-region node count) rows, one
/// per tiling. The node count is the balanced per-sub-region share
/// round(n_nodes / W).
std::string render_table1_csv(const NetworkConfig& cfg, std::span<const TilingPlan> plans);

/// JSON dump of the tiling construction per altitude: footprint radius,
/// ring layouts, center sub-region flag, the raw ring-count sum and the
/// final total, plus the ordered centers (the trajectory).
std::string render_tiling_json(const NetworkConfig& cfg, std::span<const TilingPlan> plans);

/// JSON for an optimization run: best altitude, best throughput, constraint
/// status, the full sweep and any skipped altitudes.
std::string render_opt_json(const Optimum& opt, const NetworkConfig& cfg, Mode mode);

/// One row of the altitude/threshold/scheme sweep CSV.
struct SchemeGammaRow {
    double altitude = 0.0;
    Scheme scheme = Scheme::EqualInterval;
    double gamma_db = 0.0;
    double throughput_bps = 0.0;
};

std::string render_fig2_csv(std::span<const SchemeGammaRow> rows);
std::string render_fig3_csv(std::span<const ThetaSweepRow> rows);
std::string render_fig4_csv(std::span<const NlSweepRow> rows);

/// CSV of the waypoint sequence at one altitude.
std::string render_waypoints_csv(const FlightSchedule& schedule);

/// One closed-form-vs-Monte-Carlo comparison row.
struct ValidateRow {
    double altitude = 0.0;
    int subregion = 0;
    int n_l = 0;
    double gamma_db = 0.0;
    Scheme scheme = Scheme::EqualInterval;
    std::uint64_t trials = 0;
    double outage_mc = 0.0;
    double std_err = 0.0;
    double outage_analytic = 0.0;
    double abs_err = 0.0;
    double tol = 0.0;
    bool pass = false;
};

std::string render_validate_csv(std::span<const ValidateRow> rows);

} // namespace bscat
