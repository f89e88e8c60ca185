// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 bscat authors
//
// Coverage geometry: the hexagonal target area is tiled with equal circular
// sub-regions of radius r = H * tan(theta/2), the footprint of the UAV's
// illumination cone at hover altitude H. Sub-region centers are arranged on
// concentric rings; the UAV visits one waypoint above each center and serves
// that sub-region for one sub-slot.

#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "bscat/config.hpp"

namespace bscat {

/// Regular hexagon centered at the origin with a vertex on the +x axis.
/// cov_radius is the circumradius (half of the corner-to-corner diameter).
struct TargetArea {
    double cov_radius = 100.0;

    bool contains(double x, double y) const;
};

/// A backscatter node on the ground.
struct Node {
    int id = -1;
    double x = 0.0;
    double y = 0.0;
    int subregion = -1;  ///< visit-order index of the assigned sub-region, -1 while unassigned
};

/// One ring of sub-region centers.
struct RingLayout {
    double radius = 0.0;   ///< distance of the ring's centers from the origin
    double beta_rad = 0.0; ///< angle subtended by one sub-region on this ring
    int count = 0;         ///< number of sub-regions the ring holds
};

/// Complete tiling for one altitude: ring layouts plus the ordered list of
/// sub-region centers (outermost ring first, counter-clockwise within a
/// ring, optional center sub-region last).
struct TilingPlan {
    double altitude = 0.0;
    double subregion_radius = 0.0;
    int disc_count = 0;                       ///< number of concentric rings (M)
    std::vector<RingLayout> rings;            ///< empty for a single-sub-region plan
    bool has_center_subregion = false;
    std::vector<std::array<double, 2>> centers;

    int total_subregions() const { return static_cast<int>(centers.size()); }
};

/// Waypoints in visit order plus the resulting frame duration.
struct FlightSchedule {
    std::vector<std::array<double, 3>> waypoints;
    double subslot_s = 0.0;
    double total_flight_time = 0.0; ///< waypoints.size() * subslot_s
};

/// Footprint radius r = h * tan(theta/2).
/// Throws std::domain_error unless h > 0 and theta_rad lies in (0, pi).
double sub_region_radius(double h, double theta_rad);

/// Number of concentric discs of radius step 2r that fit into a coverage
/// disc of radius r_cov: floor(r_cov / 2r) for r <= r_cov/2, otherwise 1.
/// Throws std::domain_error if r <= 0 or r > r_cov (the footprint already
/// covers everything; callers must use the single-sub-region branch).
int disc_count(double r, double r_cov);

/// Layout of ring m (1-based, m = 1 outermost): centers sit at distance
/// r_cov - (2m-1) r and subtend beta = 2 asin(r / ring_radius) each, so the
/// ring holds floor(2 pi / beta) sub-regions.
/// Throws std::domain_error if the ring is degenerate (r > ring_radius):
/// such a ring can hold at most one circle and has no valid layout.
RingLayout ring_geometry(int m, double r, double r_cov);

/// Sub-region count for a footprint radius, without the W_max cap. Used by
/// build_tiling and by altitude-set construction.
int subregion_count_for_radius(double r, double r_cov);

/// Build the tiling for altitude h. The footprint radius follows from
/// cfg.theta_deg; r > cov_radius/2 degenerates to a single sub-region at the
/// origin. When several rings leave an uncovered central hole, one extra
/// sub-region is added at the origin. Centers are ordered outermost ring
/// first, by increasing angle within a ring, center sub-region last.
/// Throws infeasible_error if the total exceeds cfg.w_max.
TilingPlan build_tiling(double h, const NetworkConfig& cfg);

/// Drop n nodes uniformly over the hexagonal target area (rejection sampling
/// from the circumscribed disc). Deterministic for a fixed seed; node ids are
/// 0..n-1 in draw order.
std::vector<Node> place_nodes(int n, const TargetArea& area, std::uint64_t seed);

/// Assign each node to the nearest sub-region center (ties broken by the
/// lower center index). Returns per-sub-region node counts.
std::vector<int> assign_nodes(std::vector<Node>& nodes, const TilingPlan& plan);

/// One waypoint above each center in visit order; frame time = W * subslot.
FlightSchedule flight_schedule(const TilingPlan& plan, double subslot_s);

/// Slant range from a ground node to a waypoint.
double distance(const Node& node, const std::array<double, 3>& waypoint);

} // namespace bscat
