// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 bscat authors
//
// Scenario synthesis: turns a tiling plan plus a network configuration into
// per-sub-region node instances (positions, slant ranges, reflection
// coefficients in SIC order). Instances are the shared input of the
// closed-form outage chain and the Monte Carlo estimator, so comparisons
// between the two always see identical geometry.

#pragma once

#include <cstdint>
#include <vector>

#include "bscat/config.hpp"
#include "bscat/geometry.hpp"
#include "bscat/link.hpp"

namespace bscat {

/// How node positions and per-sub-region counts are generated.
enum class Layout {
    /// Deterministic counts: N is split as evenly as possible over the
    /// sub-regions (counts differ by at most one, sub-regions earlier in the
    /// visit order get the extras) and each sub-region's nodes are drawn
    /// uniformly over the part of the target area it serves. This is the
    /// layout used by the altitude/parameter sweeps.
    Balanced,
    /// Binomial point process: N nodes dropped uniformly over the whole
    /// hexagon, then assigned to the nearest sub-region center, so counts
    /// fluctuate (and sub-regions can be empty). Used for validation runs.
    Placed,
};

std::string to_string(Layout layout);

/// One sub-region ready for outage evaluation: serving waypoint is
/// (center_x, center_y, altitude), records are SIC-ordered with assigned
/// reflection coefficients and unit shadowing gains.
struct SubregionInstance {
    int index = 0; ///< visit-order index within the tiling
    double center_x = 0.0;
    double center_y = 0.0;
    double altitude = 0.0;
    std::vector<LinkRecord> records;

    int n_l() const { return static_cast<int>(records.size()); }
};

/// Split n into w near-equal parts: the first n % w parts get one extra.
std::vector<int> balanced_counts(int n, int w);

/// Build all sub-region instances for a tiling. Balanced layout synthesizes
/// positions per sub-region (deterministic in cfg.seed and the altitude);
/// placed layout drops cfg.n_nodes nodes over the hexagon and groups them by
/// nearest center. Node ids are globally unique, assigned in draw order.
std::vector<SubregionInstance> make_instances(const TilingPlan& plan, const NetworkConfig& cfg,
                                              Layout layout = Layout::Balanced);

/// A standalone sub-region with exactly n_l nodes drawn uniformly over a
/// disc of radius altitude * tan(theta/2) centered at the origin, serving
/// waypoint directly above. `variant` selects one of many independent
/// geometry draws for the same (n_l, altitude), e.g. for averaging the
/// per-sub-region bits curve over node placements.
SubregionInstance make_single_subregion(int n_l, double altitude, const NetworkConfig& cfg,
                                        std::uint64_t variant = 0);

/// Attach radio constants to an instance for the instantaneous-SINR API.
SubregionRealization to_realization(const SubregionInstance& inst, const LinkParams& params);

} // namespace bscat
