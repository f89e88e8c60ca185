// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 bscat authors

#include "bscat/config.hpp"

#include <cmath>
#include <charconv>
#include <fstream>
#include <sstream>

namespace bscat {

std::string to_string(Scheme s) {
    return s == Scheme::EqualInterval ? "equal-interval" : "uniform";
}

Scheme scheme_from_string(const std::string& s) {
    if (s == "equal-interval")
        return Scheme::EqualInterval;
    if (s == "uniform")
        return Scheme::Uniform;
    throw config_error("scheme: expected 'equal-interval' or 'uniform', got '" + s + "'");
}

double NetworkConfig::shadow_sigma_db() const { return std::sqrt(shadow_var_db); }

NetworkConfig default_config() { return NetworkConfig{}; }

namespace {

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos)
        return "";
    const auto b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

double parse_double(const std::string& key, const std::string& value) {
    try {
        std::size_t pos = 0;
        const double v = std::stod(value, &pos);
        if (pos != value.size())
            throw config_error(key + ": trailing characters in '" + value + "'");
        return v;
    } catch (const config_error&) {
        throw;
    } catch (const std::exception&) {
        throw config_error(key + ": cannot parse '" + value + "' as a number");
    }
}

long long parse_int(const std::string& key, const std::string& value) {
    try {
        std::size_t pos = 0;
        const long long v = std::stoll(value, &pos);
        if (pos != value.size())
            throw config_error(key + ": trailing characters in '" + value + "'");
        return v;
    } catch (const config_error&) {
        throw;
    } catch (const std::exception&) {
        throw config_error(key + ": cannot parse '" + value + "' as an integer");
    }
}

std::uint64_t parse_u64(const std::string& key, const std::string& value) {
    const long long v = parse_int(key, value);
    if (v < 0)
        throw config_error(key + ": must be non-negative, got " + value);
    return static_cast<std::uint64_t>(v);
}

std::vector<double> parse_double_list(const std::string& key, const std::string& value) {
    std::vector<double> out;
    std::stringstream ss(value);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (item.empty())
            throw config_error(key + ": empty element in list '" + value + "'");
        out.push_back(parse_double(key, item));
    }
    if (out.empty())
        throw config_error(key + ": list must not be empty");
    return out;
}

} // namespace

void apply_override(NetworkConfig& cfg, const std::string& key, const std::string& value) {
    if (key == "n_nodes")
        cfg.n_nodes = static_cast<int>(parse_int(key, value));
    else if (key == "theta_deg")
        cfg.theta_deg = parse_double(key, value);
    else if (key == "p_u_dbm")
        cfg.p_u_dbm = parse_double(key, value);
    else if (key == "noise_dbm")
        cfg.noise_dbm = parse_double(key, value);
    else if (key == "rate_bps")
        cfg.rate_bps = parse_double(key, value);
    else if (key == "cov_radius_m")
        cfg.cov_radius_m = parse_double(key, value);
    else if (key == "gamma_db")
        cfg.gamma_db = parse_double(key, value);
    else if (key == "alpha")
        cfg.alpha = parse_double(key, value);
    else if (key == "zeta_min")
        cfg.zeta_min = parse_double(key, value);
    else if (key == "zeta_max")
        cfg.zeta_max = parse_double(key, value);
    else if (key == "w_max")
        cfg.w_max = static_cast<int>(parse_int(key, value));
    else if (key == "shadow_var_db")
        cfg.shadow_var_db = parse_double(key, value);
    else if (key == "subslot_s")
        cfg.subslot_s = parse_double(key, value);
    else if (key == "seed")
        cfg.seed = parse_u64(key, value);
    else if (key == "trials")
        cfg.trials = parse_u64(key, value);
    else if (key == "scheme")
        cfg.scheme = scheme_from_string(value);
    else if (key == "altitude_set")
        cfg.altitude_set = parse_double_list(key, value);
    else
        throw config_error("unknown config key '" + key + "'");
}

void apply_override_expr(NetworkConfig& cfg, const std::string& expr) {
    const auto eq = expr.find('=');
    if (eq == std::string::npos)
        throw config_error("override must look like key=value, got '" + expr + "'");
    apply_override(cfg, trim(expr.substr(0, eq)), trim(expr.substr(eq + 1)));
}

NetworkConfig load_config(const std::string& path, const std::vector<std::string>& overrides) {
    NetworkConfig cfg;
    if (!path.empty()) {
        std::ifstream in(path);
        if (!in)
            throw config_error("cannot open config file '" + path + "'");
        std::string line;
        int lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            const auto hash = line.find('#');
            if (hash != std::string::npos)
                line = line.substr(0, hash);
            line = trim(line);
            if (line.empty())
                continue;
            const auto eq = line.find('=');
            if (eq == std::string::npos)
                throw config_error(path + ":" + std::to_string(lineno) +
                                   ": expected 'key = value', got '" + line + "'");
            try {
                apply_override(cfg, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
            } catch (const config_error& e) {
                throw config_error(path + ":" + std::to_string(lineno) + ": " + e.what());
            }
        }
    }
    for (const auto& expr : overrides)
        apply_override_expr(cfg, expr);
    cfg.validate();
    return cfg;
}

void NetworkConfig::validate() const {
    if (n_nodes < 1)
        throw config_error("n_nodes: must be >= 1, got " + std::to_string(n_nodes));
    if (!(theta_deg > 0.0 && theta_deg < 180.0))
        throw config_error("theta_deg: must lie in (0, 180), got " + std::to_string(theta_deg));
    if (!std::isfinite(p_u_dbm))
        throw config_error("p_u_dbm: must be finite");
    if (!std::isfinite(noise_dbm))
        throw config_error("noise_dbm: must be finite");
    if (!(rate_bps > 0.0))
        throw config_error("rate_bps: must be > 0, got " + std::to_string(rate_bps));
    if (!(cov_radius_m > 0.0))
        throw config_error("cov_radius_m: must be > 0, got " + std::to_string(cov_radius_m));
    if (!std::isfinite(gamma_db))
        throw config_error("gamma_db: must be finite");
    if (!(alpha > 0.0))
        throw config_error("alpha: must be > 0, got " + std::to_string(alpha));
    if (!(zeta_min > 0.0 && zeta_min < 1.0))
        throw config_error("zeta_min: must lie in (0, 1), got " + std::to_string(zeta_min));
    if (!(zeta_max > 0.0 && zeta_max < 1.0))
        throw config_error("zeta_max: must lie in (0, 1), got " + std::to_string(zeta_max));
    if (!(zeta_min < zeta_max))
        throw config_error("zeta_min: must be < zeta_max (" + std::to_string(zeta_min) +
                           " >= " + std::to_string(zeta_max) + ")");
    if (w_max < 1)
        throw config_error("w_max: must be >= 1, got " + std::to_string(w_max));
    if (!(shadow_var_db >= 0.0))
        throw config_error("shadow_var_db: must be >= 0, got " + std::to_string(shadow_var_db));
    if (!(subslot_s > 0.0))
        throw config_error("subslot_s: must be > 0, got " + std::to_string(subslot_s));
    if (trials < 1)
        throw config_error("trials: must be >= 1");
    if (altitude_set.empty())
        throw config_error("altitude_set: must not be empty");
    for (double h : altitude_set)
        if (!(h > 0.0) || !std::isfinite(h))
            throw config_error("altitude_set: altitudes must be positive and finite, got " +
                               std::to_string(h));
}

} // namespace bscat
