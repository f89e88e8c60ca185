// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 bscat authors

#include "bscat/scenario.hpp"

#include <bit>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "bscat/rng.hpp"

namespace bscat {

std::string to_string(Layout layout) {
    return layout == Layout::Balanced ? "balanced" : "placed";
}

std::vector<int> balanced_counts(int n, int w) {
    if (n < 0)
        throw std::domain_error("balanced_counts: node count must be >= 0, got " + std::to_string(n));
    if (w < 1)
        throw std::domain_error("balanced_counts: sub-region count must be >= 1, got " +
                                std::to_string(w));
    std::vector<int> counts(static_cast<std::size_t>(w), n / w);
    for (int l = 0; l < n % w; ++l)
        ++counts[static_cast<std::size_t>(l)];
    return counts;
}

namespace {

/// Index of the center nearest to (x, y); ties go to the lower index,
/// matching assign_nodes.
std::size_t nearest_center(const std::vector<std::array<double, 2>>& centers, double x, double y) {
    std::size_t best = 0;
    double best_d2 = std::numeric_limits<double>::infinity();
    for (std::size_t l = 0; l < centers.size(); ++l) {
        const double dx = x - centers[l][0];
        const double dy = y - centers[l][1];
        const double d2 = dx * dx + dy * dy;
        if (d2 < best_d2) {
            best_d2 = d2;
            best = l;
        }
    }
    return best;
}

/// Finish an instance: slant ranges to the serving waypoint, SIC order,
/// reflection coefficients by rank.
void finalize_instance(SubregionInstance& inst, const std::vector<double>& xs,
                       const std::vector<double>& ys, const std::vector<int>& ids,
                       const NetworkConfig& cfg) {
    inst.records.clear();
    inst.records.reserve(xs.size());
    for (std::size_t k = 0; k < xs.size(); ++k) {
        LinkRecord rec;
        rec.node_id = ids[k];
        const double dx = xs[k] - inst.center_x;
        const double dy = ys[k] - inst.center_y;
        rec.distance = std::sqrt(dx * dx + dy * dy + inst.altitude * inst.altitude);
        inst.records.push_back(rec);
    }
    sic_order(inst.records);
    if (!inst.records.empty()) {
        const std::vector<double> zetas =
            assign_reflection_coeffs(inst.records.size(), cfg.zeta_min, cfg.zeta_max, cfg.scheme);
        for (std::size_t k = 0; k < inst.records.size(); ++k)
            inst.records[k].zeta = zetas[k];
    }
}

constexpr int kMaxRejectionTries = 1000000;

/// Marker mixed into the synthesis stream for standalone sub-regions so they
/// never share draws with tiled instances.
constexpr std::uint64_t kStandaloneTag = 0xffffffffffffffffULL;

} // namespace

std::vector<SubregionInstance> make_instances(const TilingPlan& plan, const NetworkConfig& cfg,
                                              Layout layout) {
    const int w = plan.total_subregions();
    if (w < 1)
        throw std::domain_error("make_instances: tiling plan has no sub-regions");

    std::vector<SubregionInstance> instances(static_cast<std::size_t>(w));
    for (int l = 0; l < w; ++l) {
        SubregionInstance& inst = instances[static_cast<std::size_t>(l)];
        inst.index = l;
        inst.center_x = plan.centers[static_cast<std::size_t>(l)][0];
        inst.center_y = plan.centers[static_cast<std::size_t>(l)][1];
        inst.altitude = plan.altitude;
    }

    const TargetArea area{cfg.cov_radius_m};

    if (layout == Layout::Placed) {
        std::vector<Node> nodes = place_nodes(cfg.n_nodes, area, cfg.seed);
        assign_nodes(nodes, plan);
        std::vector<std::vector<double>> xs(static_cast<std::size_t>(w));
        std::vector<std::vector<double>> ys(static_cast<std::size_t>(w));
        std::vector<std::vector<int>> ids(static_cast<std::size_t>(w));
        for (const Node& node : nodes) {
            const auto l = static_cast<std::size_t>(node.subregion);
            xs[l].push_back(node.x);
            ys[l].push_back(node.y);
            ids[l].push_back(node.id);
        }
        for (int l = 0; l < w; ++l) {
            const auto lu = static_cast<std::size_t>(l);
            finalize_instance(instances[lu], xs[lu], ys[lu], ids[lu], cfg);
        }
        return instances;
    }

    // Balanced layout: near-equal counts, nodes drawn uniformly over each
    // sub-region's service cell (the part of the hexagon closer to its
    // center than to any other), by rejection from the hexagon. The stream
    // is keyed per (seed, sub-region, altitude) so a sweep re-running one
    // altitude always reproduces the same instances.
    const std::vector<int> counts = balanced_counts(cfg.n_nodes, w);
    int next_id = 0;
    for (int l = 0; l < w; ++l) {
        const auto lu = static_cast<std::size_t>(l);
        RngStream rng(CounterRng{cfg.seed, stream::kSynthesis, static_cast<std::uint64_t>(l),
                                 std::bit_cast<std::uint64_t>(plan.altitude)});
        std::vector<double> xs, ys;
        std::vector<int> ids;
        for (int k = 0; k < counts[lu]; ++k) {
            double x = 0.0;
            double y = 0.0;
            bool accepted = false;
            for (int tries = 0; tries < kMaxRejectionTries; ++tries) {
                const double rho = area.cov_radius * std::sqrt(rng.next_uniform01());
                const double phi = 2.0 * kPi * rng.next_uniform01();
                x = rho * std::cos(phi);
                y = rho * std::sin(phi);
                if (area.contains(x, y) &&
                    nearest_center(plan.centers, x, y) == static_cast<std::size_t>(l)) {
                    accepted = true;
                    break;
                }
            }
            if (!accepted)
                throw std::runtime_error("make_instances: sub-region " + std::to_string(l) +
                                         " has a vanishing service cell; cannot place nodes");
            xs.push_back(x);
            ys.push_back(y);
            ids.push_back(next_id++);
        }
        finalize_instance(instances[lu], xs, ys, ids, cfg);
    }
    return instances;
}

SubregionInstance make_single_subregion(int n_l, double altitude, const NetworkConfig& cfg,
                                        std::uint64_t variant) {
    if (n_l < 0)
        throw std::domain_error("make_single_subregion: node count must be >= 0, got " +
                                std::to_string(n_l));
    SubregionInstance inst;
    inst.index = 0;
    inst.altitude = altitude;
    const double r = sub_region_radius(altitude, cfg.theta_rad());

    RngStream rng(CounterRng{cfg.seed, stream::kSynthesis, kStandaloneTag ^ variant,
                             std::bit_cast<std::uint64_t>(altitude)});
    std::vector<double> xs, ys;
    std::vector<int> ids;
    for (int k = 0; k < n_l; ++k) {
        const double rho = r * std::sqrt(rng.next_uniform01());
        const double phi = 2.0 * kPi * rng.next_uniform01();
        xs.push_back(rho * std::cos(phi));
        ys.push_back(rho * std::sin(phi));
        ids.push_back(k);
    }
    finalize_instance(inst, xs, ys, ids, cfg);
    return inst;
}

SubregionRealization to_realization(const SubregionInstance& inst, const LinkParams& params) {
    SubregionRealization sr;
    sr.records = inst.records;
    sr.p_u_w = params.p_u_w;
    sr.noise_w = params.noise_w;
    sr.alpha = params.alpha;
    return sr;
}

} // namespace bscat
