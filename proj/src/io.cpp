// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 bscat authors

#include "bscat/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <system_error>

#include <json.hpp>

namespace bscat {

std::string fmt_double(double v) {
    char buf[40];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

void atomic_write(const std::filesystem::path& path, const std::string& content) {
    const std::filesystem::path dir = path.parent_path();
    if (!dir.empty())
        std::filesystem::create_directories(dir);
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out)
            throw std::runtime_error("atomic_write: cannot open " + tmp.string());
        out.write(content.data(), static_cast<std::streamsize>(content.size()));
        out.flush();
        if (!out)
            throw std::runtime_error("atomic_write: short write to " + tmp.string());
    }
    std::filesystem::rename(tmp, path);
}

std::string render_table1_csv(const NetworkConfig& cfg, std::span<const TilingPlan> plans) {
    std::string csv = "h_m,w,n_l\n";
    for (const TilingPlan& plan : plans) {
        const long n_l = std::lround(static_cast<double>(cfg.n_nodes) /
                                     static_cast<double>(plan.total_subregions()));
        csv += fmt_double(plan.altitude);
        csv += ',';
        csv += std::to_string(plan.total_subregions());
        csv += ',';
        csv += std::to_string(n_l);
        csv += '\n';
    }
    return csv;
}

std::string render_tiling_json(const NetworkConfig& cfg, std::span<const TilingPlan> plans) {
    nlohmann::ordered_json doc;
    doc["theta_deg"] = cfg.theta_deg;
    doc["cov_radius_m"] = cfg.cov_radius_m;
    doc["w_max"] = cfg.w_max;
    doc["altitudes"] = nlohmann::ordered_json::array();
    for (const TilingPlan& plan : plans) {
        nlohmann::ordered_json entry;
        entry["h_m"] = plan.altitude;
        entry["subregion_radius_m"] = plan.subregion_radius;
        entry["disc_count"] = plan.disc_count;
        entry["rings"] = nlohmann::ordered_json::array();
        int ring_sum = 0;
        for (const RingLayout& ring : plan.rings) {
            entry["rings"].push_back({{"radius_m", ring.radius},
                                      {"beta_rad", ring.beta_rad},
                                      {"count", ring.count}});
            ring_sum += ring.count;
        }
        entry["sum_ring_counts"] = ring_sum;
        entry["has_center_subregion"] = plan.has_center_subregion;
        entry["w_total"] = plan.total_subregions();
        entry["centers"] = nlohmann::ordered_json::array();
        for (const auto& c : plan.centers)
            entry["centers"].push_back({c[0], c[1]});
        doc["altitudes"].push_back(std::move(entry));
    }
    return doc.dump(2) + "\n";
}

namespace {

nlohmann::ordered_json sweep_to_json(const AltitudeSweep& sweep) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const SweepRow& row : sweep.rows) {
        nlohmann::ordered_json entry;
        entry["h_m"] = row.altitude;
        entry["w"] = row.w;
        entry["n_l"] = row.n_l;
        entry["outage"] = row.outage;
        entry["bits"] = row.bits;
        entry["throughput_bps"] = row.throughput_bps;
        entry["throughput_std_err"] = row.throughput_std_err;
        rows.push_back(std::move(entry));
    }
    return rows;
}

} // namespace

std::string render_opt_json(const Optimum& opt, const NetworkConfig& cfg, Mode mode) {
    nlohmann::ordered_json doc;
    doc["mode"] = to_string(mode);
    doc["scheme"] = to_string(cfg.scheme);
    doc["gamma_db"] = cfg.gamma_db;
    doc["w_max"] = cfg.w_max;
    doc["h_star_m"] = opt.h_star;
    doc["c_star_bps"] = opt.c_star_bps;
    doc["constraint_satisfied"] = true; // a returned optimum always respects the budget
    doc["sweep"] = sweep_to_json(opt.sweep);
    doc["skipped"] = nlohmann::ordered_json::array();
    for (const auto& [h, reason] : opt.sweep.skipped)
        doc["skipped"].push_back({{"h_m", h}, {"reason", reason}});
    return doc.dump(2) + "\n";
}

std::string render_fig2_csv(std::span<const SchemeGammaRow> rows) {
    std::string csv = "h_m,scheme,gamma_db,throughput_bps\n";
    for (const SchemeGammaRow& row : rows) {
        csv += fmt_double(row.altitude);
        csv += ',';
        csv += to_string(row.scheme);
        csv += ',';
        csv += fmt_double(row.gamma_db);
        csv += ',';
        csv += fmt_double(row.throughput_bps);
        csv += '\n';
    }
    return csv;
}

std::string render_fig3_csv(std::span<const ThetaSweepRow> rows) {
    std::string csv = "theta_deg,n_nodes,throughput_bps\n";
    for (const ThetaSweepRow& row : rows) {
        csv += fmt_double(row.theta_deg);
        csv += ',';
        csv += std::to_string(row.n_nodes);
        csv += ',';
        csv += fmt_double(row.throughput_bps);
        csv += '\n';
    }
    return csv;
}

std::string render_fig4_csv(std::span<const NlSweepRow> rows) {
    std::string csv = "n_l,alpha,bits\n";
    for (const NlSweepRow& row : rows) {
        csv += std::to_string(row.n_l);
        csv += ',';
        csv += fmt_double(row.alpha);
        csv += ',';
        csv += fmt_double(row.bits);
        csv += '\n';
    }
    return csv;
}

std::string render_waypoints_csv(const FlightSchedule& schedule) {
    std::string csv = "order,x_m,y_m,h_m,subslot_s\n";
    for (std::size_t i = 0; i < schedule.waypoints.size(); ++i) {
        const auto& wp = schedule.waypoints[i];
        csv += std::to_string(i + 1);
        csv += ',';
        csv += fmt_double(wp[0]);
        csv += ',';
        csv += fmt_double(wp[1]);
        csv += ',';
        csv += fmt_double(wp[2]);
        csv += ',';
        csv += fmt_double(schedule.subslot_s);
        csv += '\n';
    }
    return csv;
}

std::string render_validate_csv(std::span<const ValidateRow> rows) {
    std::string csv =
        "h_m,subregion,n_l,gamma_db,scheme,trials,outage_mc,stderr,outage_analytic,abs_err,tol,"
        "pass\n";
    for (const ValidateRow& row : rows) {
        csv += fmt_double(row.altitude);
        csv += ',';
        csv += std::to_string(row.subregion);
        csv += ',';
        csv += std::to_string(row.n_l);
        csv += ',';
        csv += fmt_double(row.gamma_db);
        csv += ',';
        csv += to_string(row.scheme);
        csv += ',';
        csv += std::to_string(row.trials);
        csv += ',';
        csv += fmt_double(row.outage_mc);
        csv += ',';
        csv += fmt_double(row.std_err);
        csv += ',';
        csv += fmt_double(row.outage_analytic);
        csv += ',';
        csv += fmt_double(row.abs_err);
        csv += ',';
        csv += fmt_double(row.tol);
        csv += ',';
        csv += row.pass ? "true" : "false";
        csv += '\n';
    }
    return csv;
}

} // namespace bscat
