// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 bscat authors

#include "bscat/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "bscat/geometry.hpp"
#include "bscat/mc.hpp"
#include "bscat/outage.hpp"

namespace bscat {

std::string to_string(Mode mode) { return mode == Mode::Analytic ? "analytic" : "mc"; }

Mode mode_from_string(const std::string& s) {
    if (s == "analytic")
        return Mode::Analytic;
    if (s == "mc")
        return Mode::Mc;
    throw config_error("unknown mode '" + s + "' (expected 'analytic' or 'mc')");
}

double subregion_bits(int n_l, double t_s, double rate_bps, double outage) {
    if (n_l < 0)
        throw std::domain_error("subregion_bits: node count must be >= 0");
    if (!(t_s > 0.0) || !(rate_bps > 0.0))
        throw std::domain_error("subregion_bits: sub-slot duration and rate must be > 0");
    if (!(outage >= 0.0 && outage <= 1.0))
        throw std::domain_error("subregion_bits: outage must lie in [0, 1], got " +
                                std::to_string(outage));
    return static_cast<double>(n_l) * t_s * rate_bps * (1.0 - outage);
}

SweepRow evaluate_altitude(double h, const NetworkConfig& cfg, Mode mode, Layout layout) {
    const TilingPlan plan = build_tiling(h, cfg);
    const std::vector<SubregionInstance> instances = make_instances(plan, cfg, layout);
    const LinkParams params = LinkParams::from(cfg);

    SweepRow row;
    row.altitude = h;
    row.w = plan.total_subregions();
    double sum = 0.0;
    double var = 0.0;
    for (const SubregionInstance& inst : instances) {
        double outage = 0.0;
        double se = 0.0;
        if (mode == Mode::Analytic) {
            outage = subregion_outage(inst, params).outage;
        } else {
            const McEstimate est = mc_subregion_outage(inst, params, cfg.trials, cfg.seed);
            outage = est.outage_hat;
            se = est.std_err;
        }
        const double n_l = inst.n_l();
        row.n_l.push_back(inst.n_l());
        row.outage.push_back(outage);
        row.bits.push_back(subregion_bits(inst.n_l(), cfg.subslot_s, cfg.rate_bps, outage));
        sum += n_l * (1.0 - outage);
        var += n_l * n_l * se * se;
    }
    // Bits per frame over frame time W*T: the hover time cancels exactly, so
    // the throughput is computed in its T-free form.
    row.throughput_bps = cfg.rate_bps / static_cast<double>(row.w) * sum;
    row.throughput_std_err = cfg.rate_bps / static_cast<double>(row.w) * std::sqrt(var);
    return row;
}

double network_throughput(double h, const NetworkConfig& cfg, Mode mode) {
    return evaluate_altitude(h, cfg, mode).throughput_bps;
}

AltitudeSweep sweep_altitudes(std::span<const double> altitudes, const NetworkConfig& cfg,
                              Mode mode) {
    AltitudeSweep sweep;
    for (const double h : altitudes) {
        try {
            sweep.rows.push_back(evaluate_altitude(h, cfg, mode));
        } catch (const infeasible_error& e) {
            sweep.skipped.emplace_back(h, e.what());
        }
    }
    return sweep;
}

Optimum optimize_altitude(const NetworkConfig& cfg, Mode mode) {
    Optimum opt;
    opt.sweep = sweep_altitudes(cfg.altitude_set, cfg, mode);
    if (opt.sweep.rows.empty())
        throw infeasible_error("optimize_altitude: no altitude in the set satisfies the "
                               "sub-region budget of " + std::to_string(cfg.w_max));
    const SweepRow* best = &opt.sweep.rows.front();
    for (const SweepRow& row : opt.sweep.rows) {
        if (row.throughput_bps > best->throughput_bps ||
            (row.throughput_bps == best->throughput_bps && row.altitude > best->altitude))
            best = &row;
    }
    opt.h_star = best->altitude;
    opt.c_star_bps = best->throughput_bps;
    return opt;
}

std::vector<double> altitude_set_for_theta(double theta_deg, const NetworkConfig& cfg) {
    if (!(theta_deg > 0.0 && theta_deg < 180.0))
        throw std::domain_error("altitude_set_for_theta: angle must lie in (0, 180) degrees");
    const double r_cov = cfg.cov_radius_m;
    constexpr int kGrid = 20000;
    const double step = r_cov / kGrid;

    // Scan the footprint radius and record, per sub-region count k, the
    // longest contiguous radius interval producing exactly k sub-regions.
    struct Run {
        int start = -1;
        int len = 0;
    };
    std::vector<Run> best(static_cast<std::size_t>(cfg.w_max) + 1);
    int run_count = -1;
    int run_start = 0;
    const auto close_run = [&](int end_idx) {
        if (run_count >= 1 && run_count <= cfg.w_max) {
            Run& b = best[static_cast<std::size_t>(run_count)];
            if (end_idx - run_start > b.len) {
                b.start = run_start;
                b.len = end_idx - run_start;
            }
        }
    };
    for (int i = 1; i <= kGrid; ++i) {
        const int count = subregion_count_for_radius(i * step, r_cov);
        if (count != run_count) {
            close_run(i);
            run_count = count;
            run_start = i;
        }
    }
    close_run(kGrid + 1);

    const double tan_half = std::tan(0.5 * theta_deg * kPi / 180.0);
    std::vector<double> altitudes;
    for (int k = 1; k <= cfg.w_max; ++k) {
        const Run& b = best[static_cast<std::size_t>(k)];
        // A count seen on a single grid point is a layout transition that
        // happens to land on the grid, not a radius interval: a 1-ulp change
        // of the altitude would flip it, so it is not robustly achievable.
        if (b.len < 2)
            continue;
        const double r_mid = (b.start + 0.5 * (b.len - 1)) * step;
        const double h = r_mid / tan_half;
        // Safety net: keep the altitude only if its footprint re-tiles to k.
        if (subregion_count_for_radius(sub_region_radius(h, theta_deg * kPi / 180.0), r_cov) != k)
            continue;
        altitudes.push_back(h);
    }
    return altitudes; // increasing k = decreasing altitude
}

std::vector<ThetaSweepRow> sweep_theta(std::span<const double> theta_values,
                                       std::span<const int> n_values, const NetworkConfig& cfg,
                                       Mode mode) {
    std::vector<ThetaSweepRow> rows;
    for (const double theta : theta_values) {
        NetworkConfig base = cfg;
        base.theta_deg = theta;
        base.altitude_set = altitude_set_for_theta(theta, cfg);
        for (const int n : n_values) {
            NetworkConfig point = base;
            point.n_nodes = n;
            const Optimum opt = optimize_altitude(point, mode);
            rows.push_back({theta, n, opt.h_star, opt.c_star_bps});
        }
    }
    return rows;
}

std::vector<NlSweepRow> sweep_nl(std::span<const int> nl_values,
                                 std::span<const double> alpha_values, const NetworkConfig& cfg) {
    // Expected outage per point is averaged over independent node-placement
    // draws so the curve compares node counts, not placement luck.
    constexpr std::uint64_t kGeometryVariants = 64;
    double h_max = 0.0;
    for (const double h : cfg.altitude_set)
        h_max = std::max(h_max, h);
    double h_lo = std::min(20.0, h_max);

    const LinkParams base_params = LinkParams::from(cfg);
    std::vector<NlSweepRow> rows;
    for (const double alpha : alpha_values) {
        NetworkConfig point = cfg;
        point.alpha = alpha;
        LinkParams params = base_params;
        params.alpha = alpha;
        for (const int n_l : nl_values) {
            NlSweepRow row;
            row.n_l = n_l;
            row.alpha = alpha;
            row.bits = -1.0; // first grid point always becomes the incumbent
            for (double h = h_lo; h <= h_max + 1e-9; h += 1.0) {
                double mean_success = 0.0;
                for (std::uint64_t v = 0; v < kGeometryVariants; ++v) {
                    const SubregionInstance inst = make_single_subregion(n_l, h, point, v);
                    mean_success += 1.0 - subregion_outage(inst, params).outage;
                }
                mean_success /= static_cast<double>(kGeometryVariants);
                const double bits =
                    static_cast<double>(n_l) * cfg.subslot_s * cfg.rate_bps * mean_success;
                if (bits > row.bits) {
                    row.bits = bits;
                    row.h_opt = h;
                }
            }
            rows.push_back(row);
        }
    }
    return rows;
}

SchemeSweep sweep_zeta_scheme(const NetworkConfig& cfg, Mode mode) {
    SchemeSweep out;
    NetworkConfig eq = cfg;
    eq.scheme = Scheme::EqualInterval;
    out.equal_interval = sweep_altitudes(eq.altitude_set, eq, mode);
    NetworkConfig uni = cfg;
    uni.scheme = Scheme::Uniform;
    out.uniform = sweep_altitudes(uni.altitude_set, uni, mode);
    return out;
}

} // namespace bscat
