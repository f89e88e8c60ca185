// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 bscat authors
//
// Command-line front end: loads a configuration, runs one experiment
// (tiling tables, altitude optimization, parameter sweeps, estimator
// validation, waypoint export) and writes plot-ready CSV/JSON files.
//
// Exit codes: 0 success, 1 validation failure or internal error,
// 2 configuration/usage error, 3 infeasible request.

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "bscat/config.hpp"
#include "bscat/geometry.hpp"
#include "bscat/io.hpp"
#include "bscat/link.hpp"
#include "bscat/mc.hpp"
#include "bscat/optimizer.hpp"
#include "bscat/outage.hpp"
#include "bscat/scenario.hpp"

namespace fs = std::filesystem;

namespace {

/// A failed closed-form-vs-Monte-Carlo validation (exit code 1).
struct validation_error : std::runtime_error {
    explicit validation_error(const std::string& msg) : std::runtime_error(msg) {}
};

void write_file(const fs::path& path, const std::string& content) {
    bscat::atomic_write(path, content);
    std::cout << "wrote " << path.string() << "\n";
}

/// Build the tilings for every feasible altitude of the set, warning about
/// skipped ones. Throws infeasible_error when nothing is feasible.
std::vector<bscat::TilingPlan> feasible_tilings(const bscat::NetworkConfig& cfg) {
    std::vector<bscat::TilingPlan> plans;
    for (const double h : cfg.altitude_set) {
        try {
            plans.push_back(bscat::build_tiling(h, cfg));
        } catch (const bscat::infeasible_error& e) {
            std::cerr << "warning: skipping altitude " << bscat::fmt_double(h) << " m: " << e.what()
                      << "\n";
        }
    }
    if (plans.empty())
        throw bscat::infeasible_error("no altitude in the set satisfies the sub-region budget");
    return plans;
}

void run_table1(const bscat::NetworkConfig& cfg, const fs::path& out) {
    write_file(out / "table1.csv", bscat::render_table1_csv(cfg, feasible_tilings(cfg)));
}

void run_tile(const bscat::NetworkConfig& cfg, const fs::path& out) {
    const std::vector<bscat::TilingPlan> plans = feasible_tilings(cfg);
    write_file(out / "table1.csv", bscat::render_table1_csv(cfg, plans));
    write_file(out / "tiling.json", bscat::render_tiling_json(cfg, plans));
}

void run_optimize(const bscat::NetworkConfig& cfg, bscat::Mode mode, const fs::path& out) {
    const bscat::Optimum opt = bscat::optimize_altitude(cfg, mode);
    write_file(out / "opt.json", bscat::render_opt_json(opt, cfg, mode));
    std::cout << "h_star = " << bscat::fmt_double(opt.h_star)
              << " m, c_star = " << bscat::fmt_double(opt.c_star_bps) << " bit/s (mode "
              << bscat::to_string(mode) << ", scheme " << bscat::to_string(cfg.scheme) << ")\n";
}

void run_fig2(const bscat::NetworkConfig& cfg, bscat::Mode mode, const fs::path& out) {
    constexpr double kGammasDb[] = {-4.0, -3.0, -1.5};
    std::vector<bscat::SchemeGammaRow> rows;
    for (const double gamma_db : kGammasDb) {
        for (const bscat::Scheme scheme : {bscat::Scheme::EqualInterval, bscat::Scheme::Uniform}) {
            bscat::NetworkConfig point = cfg;
            point.gamma_db = gamma_db;
            point.scheme = scheme;
            const bscat::AltitudeSweep sweep =
                bscat::sweep_altitudes(point.altitude_set, point, mode);
            for (const bscat::SweepRow& row : sweep.rows)
                rows.push_back({row.altitude, scheme, gamma_db, row.throughput_bps});
        }
    }
    write_file(out / "fig2.csv", bscat::render_fig2_csv(rows));
}

void run_fig3(const bscat::NetworkConfig& cfg, bscat::Mode mode, const fs::path& out) {
    if (mode != bscat::Mode::Analytic)
        throw bscat::config_error(
            "fig3: only analytic mode is supported (a Monte Carlo sweep over every "
            "angle/count/altitude point is prohibitively slow)");
    constexpr double kThetasDeg[] = {40.0, 60.0, 80.0, 100.0};
    constexpr int kNodeCounts[] = {10, 40, 60, 100};
    const std::vector<bscat::ThetaSweepRow> rows =
        bscat::sweep_theta(kThetasDeg, kNodeCounts, cfg, mode);
    write_file(out / "fig3.csv", bscat::render_fig3_csv(rows));
}

void run_fig4(const bscat::NetworkConfig& cfg, bscat::Mode mode, const fs::path& out) {
    if (mode != bscat::Mode::Analytic)
        throw bscat::config_error(
            "fig4: only analytic mode is supported (the per-point altitude grid with placement "
            "averaging is prohibitively slow under Monte Carlo)");
    std::vector<int> nl_values;
    for (int n_l = 1; n_l <= 13; ++n_l)
        nl_values.push_back(n_l);
    constexpr double kAlphas[] = {2.7, 3.2};
    const std::vector<bscat::NlSweepRow> rows = bscat::sweep_nl(nl_values, kAlphas, cfg);
    write_file(out / "fig4.csv", bscat::render_fig4_csv(rows));
}

void run_waypoints(const bscat::NetworkConfig& cfg, bscat::Mode mode, const fs::path& out) {
    const bscat::Optimum opt = bscat::optimize_altitude(cfg, mode);
    const bscat::TilingPlan plan = bscat::build_tiling(opt.h_star, cfg);
    const bscat::FlightSchedule sched = bscat::flight_schedule(plan, cfg.subslot_s);
    write_file(out / "waypoints.csv", bscat::render_waypoints_csv(sched));
    std::cout << "h_star = " << bscat::fmt_double(opt.h_star) << " m, "
              << sched.waypoints.size() << " waypoints, frame time "
              << bscat::fmt_double(sched.total_flight_time) << " s\n";
}

void run_validate(const bscat::NetworkConfig& cfg, const fs::path& out) {
    const bscat::LinkParams params = bscat::LinkParams::from(cfg);
    std::vector<bscat::ValidateRow> rows;

    const auto compare = [&](const bscat::SubregionInstance& inst) {
        bscat::ValidateRow row;
        row.altitude = inst.altitude;
        row.subregion = inst.index;
        row.n_l = inst.n_l();
        row.gamma_db = cfg.gamma_db;
        row.scheme = cfg.scheme;
        row.trials = cfg.trials;
        const bscat::McEstimate est =
            bscat::mc_subregion_outage(inst, params, cfg.trials, cfg.seed);
        row.outage_mc = est.outage_hat;
        row.std_err = est.std_err;
        row.outage_analytic = bscat::subregion_outage(inst, params).outage;
        row.abs_err = std::abs(row.outage_analytic - row.outage_mc);
        // A single node involves neither the independence nor the
        // sum-approximation step, so only sampling noise separates the two
        // estimates; with interference the declared model-error budget
        // applies.
        row.tol = row.n_l <= 1 ? 3.0 * est.std_err + 1e-4 : 0.10;
        row.pass = row.abs_err <= row.tol;
        rows.push_back(row);
    };

    // Standalone sub-regions with fixed node counts...
    struct Canon {
        int n_l;
        double altitude;
    };
    constexpr Canon kCanonical[] = {{1, 43.21}, {2, 43.21}, {3, 43.21}, {5, 44.21}, {8, 58.21}};
    for (const Canon& c : kCanonical)
        compare(bscat::make_single_subregion(c.n_l, c.altitude, cfg));

    // ...plus every sub-region of every feasible tiling under a binomial
    // node drop, exercising placement, nearest-center assignment and
    // fluctuating counts end to end.
    for (const bscat::TilingPlan& plan : feasible_tilings(cfg))
        for (const bscat::SubregionInstance& inst :
             bscat::make_instances(plan, cfg, bscat::Layout::Placed))
            compare(inst);

    write_file(out / "validate.csv", bscat::render_validate_csv(rows));
    std::size_t failures = 0;
    for (const bscat::ValidateRow& row : rows)
        if (!row.pass)
            ++failures;
    std::cout << "validated " << rows.size() << " instances, " << failures << " outside tolerance\n";
    if (failures > 0)
        throw validation_error(std::to_string(failures) + " of " + std::to_string(rows.size()) +
                               " instances exceed their tolerance (see validate.csv)");
}

void report_error(bool json_errors, const std::string& type, const std::string& message) {
    if (json_errors) {
        nlohmann::ordered_json doc;
        doc["error"]["type"] = type;
        doc["error"]["message"] = message;
        std::cerr << doc.dump() << "\n";
    } else {
        std::cerr << "error: " << message << "\n";
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"UAV data-collection planner for backscatter networks: tiles the target area, "
                 "evaluates per-sub-region outage (closed form or Monte Carlo) and finds the "
                 "throughput-optimal hovering altitude"};
    app.require_subcommand(1);

    std::string config_path;
    std::vector<std::string> sets;
    std::string out_dir = ".";
    std::string mode_str = "analytic";
    std::string scheme_str;
    std::uint64_t seed = 0;
    std::uint64_t trials = 0;
    bool json_errors = false;

    app.add_option("--config", config_path, "Key=value configuration file");
    app.add_option("--set", sets, "Override one configuration key, e.g. --set gamma_db=-4");
    app.add_option("--out", out_dir, "Output directory")->capture_default_str();
    auto* opt_seed = app.add_option("--seed", seed, "Override the RNG seed");
    auto* opt_trials = app.add_option("--trials", trials, "Override the Monte Carlo trial count");
    app.add_option("--mode", mode_str, "Outage estimator")
        ->check(CLI::IsMember({"analytic", "mc"}))
        ->capture_default_str();
    auto* opt_scheme = app.add_option("--scheme", scheme_str, "Reflection-coefficient scheme")
                           ->check(CLI::IsMember({"equal-interval", "uniform"}));
    app.add_flag("--json-errors", json_errors, "Report errors as JSON on stderr");

    auto* cmd_tile = app.add_subcommand("tile", "Write the tiling table and construction dump");
    auto* cmd_table1 = app.add_subcommand("table1", "Write the altitude/sub-region-count table");
    auto* cmd_optimize = app.add_subcommand("optimize", "Exhaustive altitude search");
    auto* cmd_fig2 = app.add_subcommand(
        "fig2", "Throughput vs altitude for both schemes at -4, -3 and -1.5 dB thresholds");
    auto* cmd_fig3 = app.add_subcommand(
        "fig3", "Optimized throughput vs illumination angle for 10/40/60/100 nodes");
    auto* cmd_fig4 = app.add_subcommand(
        "fig4", "Per-sub-region bits vs node count at the per-point best altitude");
    auto* cmd_validate =
        app.add_subcommand("validate", "Compare closed-form outage against Monte Carlo");
    auto* cmd_waypoints =
        app.add_subcommand("waypoints", "Export the trajectory at the optimal altitude");
    for (CLI::App* sub : {cmd_tile, cmd_table1, cmd_optimize, cmd_fig2, cmd_fig3, cmd_fig4,
                          cmd_validate, cmd_waypoints})
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        bscat::NetworkConfig cfg = bscat::load_config(config_path, sets);
        if (opt_seed->count() > 0)
            cfg.seed = seed;
        if (opt_trials->count() > 0)
            cfg.trials = trials;
        if (opt_scheme->count() > 0)
            cfg.scheme = bscat::scheme_from_string(scheme_str);
        cfg.validate();
        const bscat::Mode mode = bscat::mode_from_string(mode_str);
        const fs::path out(out_dir);
        fs::create_directories(out);

        if (cmd_table1->parsed())
            run_table1(cfg, out);
        else if (cmd_tile->parsed())
            run_tile(cfg, out);
        else if (cmd_optimize->parsed())
            run_optimize(cfg, mode, out);
        else if (cmd_fig2->parsed())
            run_fig2(cfg, mode, out);
        else if (cmd_fig3->parsed())
            run_fig3(cfg, mode, out);
        else if (cmd_fig4->parsed())
            run_fig4(cfg, mode, out);
        else if (cmd_validate->parsed())
            run_validate(cfg, out);
        else if (cmd_waypoints->parsed())
            run_waypoints(cfg, mode, out);
        return 0;
    } catch (const bscat::config_error& e) {
        report_error(json_errors, "config_error", e.what());
        return 2;
    } catch (const bscat::infeasible_error& e) {
        report_error(json_errors, "infeasible_error", e.what());
        return 3;
    } catch (const validation_error& e) {
        report_error(json_errors, "validation_error", e.what());
        return 1;
    } catch (const std::exception& e) {
        report_error(json_errors, "internal_error", e.what());
        return 1;
    }
}
