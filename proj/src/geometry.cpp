// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 bscat authors

#include "bscat/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "bscat/rng.hpp"

namespace bscat {

bool TargetArea::contains(double x, double y) const {
    // Vertex on the +x axis, so the three edge normals point at 30, 90 and
    // 150 degrees; a point is inside iff its projection onto each normal is
    // within the apothem sqrt(3)/2 * R.
    const double apothem = 0.5 * std::sqrt(3.0) * cov_radius;
    const double c30 = 0.5 * std::sqrt(3.0);
    if (std::abs(y) > apothem)
        return false;
    if (std::abs(c30 * x + 0.5 * y) > apothem)
        return false;
    if (std::abs(c30 * x - 0.5 * y) > apothem)
        return false;
    return true;
}

double sub_region_radius(double h, double theta_rad) {
    if (!(h > 0.0))
        throw std::domain_error("sub_region_radius: altitude must be > 0, got " + std::to_string(h));
    if (!(theta_rad > 0.0 && theta_rad < kPi))
        throw std::domain_error("sub_region_radius: illumination angle must lie in (0, pi), got " +
                                std::to_string(theta_rad));
    return h * std::tan(0.5 * theta_rad);
}

int disc_count(double r, double r_cov) {
    if (!(r > 0.0))
        throw std::domain_error("disc_count: sub-region radius must be > 0, got " + std::to_string(r));
    if (r > r_cov)
        throw std::domain_error("disc_count: sub-region radius " + std::to_string(r) +
                                " exceeds coverage radius " + std::to_string(r_cov));
    if (r > 0.5 * r_cov)
        return 1;
    return static_cast<int>(std::floor(r_cov / (2.0 * r)));
}

RingLayout ring_geometry(int m, double r, double r_cov) {
    if (m < 1)
        throw std::domain_error("ring_geometry: ring index must be >= 1, got " + std::to_string(m));
    const double ring_radius = r_cov - (2.0 * m - 1.0) * r;
    // For a mathematically valid ring index (m <= floor(r_cov / 2r)) the
    // center distance can drop below r only by floating-point rounding of
    // that quotient; treat near-tangent rings as exactly tangent instead of
    // rejecting them. Anything clearly below is a caller error.
    if (!(ring_radius > 0.0) || ring_radius < r * (1.0 - 1e-9))
        throw std::domain_error("ring_geometry: ring " + std::to_string(m) +
                                " is degenerate (it can hold at most one circle of radius " +
                                std::to_string(r) + ")");
    RingLayout ring;
    ring.radius = ring_radius;
    ring.beta_rad = 2.0 * std::asin(std::min(r / ring_radius, 1.0));
    ring.count = static_cast<int>(std::floor(2.0 * kPi / ring.beta_rad));
    return ring;
}

namespace {

/// Shared tiling construction; cov_radius and r fully determine the layout.
struct RawTiling {
    int disc_count = 0;
    std::vector<RingLayout> rings;
    bool has_center = false;
    int total = 0;
};

RawTiling raw_tiling(double r, double r_cov) {
    RawTiling t;
    if (r > 0.5 * r_cov) {
        // A single footprint reaches past every ring position: one
        // sub-region at the origin serves the whole area.
        t.disc_count = 1;
        t.has_center = true;
        t.total = 1;
        return t;
    }
    t.disc_count = disc_count(r, r_cov);
    for (int m = 1; m <= t.disc_count; ++m) {
        const RingLayout ring = ring_geometry(m, r, r_cov);
        t.rings.push_back(ring);
        t.total += ring.count;
    }
    // With two or more rings the innermost ring's circles stop at distance
    // r_cov - 2 M r from the origin; if that leaves a hole, cover it with
    // one extra sub-region at the origin.
    if (t.disc_count >= 2 && r_cov - 2.0 * t.disc_count * r > 0.0) {
        t.has_center = true;
        t.total += 1;
    }
    return t;
}

} // namespace

int subregion_count_for_radius(double r, double r_cov) { return raw_tiling(r, r_cov).total; }

TilingPlan build_tiling(double h, const NetworkConfig& cfg) {
    TilingPlan plan;
    plan.altitude = h;
    plan.subregion_radius = sub_region_radius(h, cfg.theta_rad());

    const RawTiling t = raw_tiling(plan.subregion_radius, cfg.cov_radius_m);
    plan.disc_count = t.disc_count;
    plan.rings = t.rings;
    plan.has_center_subregion = t.has_center;

    if (t.total > cfg.w_max)
        throw infeasible_error("build_tiling: altitude " + std::to_string(h) + " needs " +
                               std::to_string(t.total) + " sub-regions, above the limit of " +
                               std::to_string(cfg.w_max));

    // Visit order: outermost ring (m = 1) first, counter-clockwise starting
    // at angle 0 within each ring, optional center sub-region last.
    for (const RingLayout& ring : plan.rings) {
        for (int k = 0; k < ring.count; ++k) {
            const double phi = 2.0 * kPi * k / ring.count;
            plan.centers.push_back({ring.radius * std::cos(phi), ring.radius * std::sin(phi)});
        }
    }
    if (plan.has_center_subregion)
        plan.centers.push_back({0.0, 0.0});
    return plan;
}

std::vector<Node> place_nodes(int n, const TargetArea& area, std::uint64_t seed) {
    if (n < 0)
        throw std::domain_error("place_nodes: node count must be >= 0, got " + std::to_string(n));
    std::vector<Node> nodes;
    nodes.reserve(static_cast<std::size_t>(n));
    RngStream rng(CounterRng{seed, stream::kPlacement});
    for (int i = 0; i < n; ++i) {
        Node node;
        node.id = i;
        for (;;) {
            // Uniform in the circumscribed disc, rejected to the hexagon.
            const double rho = area.cov_radius * std::sqrt(rng.next_uniform01());
            const double phi = 2.0 * kPi * rng.next_uniform01();
            node.x = rho * std::cos(phi);
            node.y = rho * std::sin(phi);
            if (area.contains(node.x, node.y))
                break;
        }
        nodes.push_back(node);
    }
    return nodes;
}

std::vector<int> assign_nodes(std::vector<Node>& nodes, const TilingPlan& plan) {
    if (plan.centers.empty())
        throw std::domain_error("assign_nodes: tiling plan has no sub-regions");
    std::vector<int> counts(plan.centers.size(), 0);
    for (Node& node : nodes) {
        int best = 0;
        double best_d2 = std::numeric_limits<double>::infinity();
        for (std::size_t l = 0; l < plan.centers.size(); ++l) {
            const double dx = node.x - plan.centers[l][0];
            const double dy = node.y - plan.centers[l][1];
            const double d2 = dx * dx + dy * dy;
            if (d2 < best_d2) {
                best_d2 = d2;
                best = static_cast<int>(l);
            }
        }
        node.subregion = best;
        ++counts[static_cast<std::size_t>(best)];
    }
    return counts;
}

FlightSchedule flight_schedule(const TilingPlan& plan, double subslot_s) {
    if (!(subslot_s > 0.0))
        throw std::domain_error("flight_schedule: sub-slot duration must be > 0, got " +
                                std::to_string(subslot_s));
    FlightSchedule sched;
    sched.subslot_s = subslot_s;
    sched.waypoints.reserve(plan.centers.size());
    for (const auto& c : plan.centers)
        sched.waypoints.push_back({c[0], c[1], plan.altitude});
    sched.total_flight_time = static_cast<double>(sched.waypoints.size()) * subslot_s;
    return sched;
}

double distance(const Node& node, const std::array<double, 3>& waypoint) {
    const double dx = node.x - waypoint[0];
    const double dy = node.y - waypoint[1];
    return std::sqrt(dx * dx + dy * dy + waypoint[2] * waypoint[2]);
}

} // namespace bscat
