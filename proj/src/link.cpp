// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 bscat authors

#include "bscat/link.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace bscat {

double LinkRecord::combined_gain(double alpha) const {
    return zeta * std::pow(distance, -2.0 * alpha);
}

LinkParams LinkParams::from(const NetworkConfig& cfg) {
    LinkParams p;
    p.p_u_w = cfg.p_u_w();
    p.noise_w = cfg.noise_w();
    p.alpha = cfg.alpha;
    p.sigma_db = cfg.shadow_sigma_db();
    p.gamma_linear = cfg.gamma_linear();
    return p;
}

double received_power(double p_u_w, double h, double d, double alpha) {
    if (!(d > 0.0))
        throw std::domain_error("received_power: distance must be > 0, got " + std::to_string(d));
    return p_u_w * h * std::pow(d, -alpha);
}

double backscatter_power(double zeta, double p_rx) {
    if (!(zeta > 0.0 && zeta < 1.0))
        throw std::domain_error("backscatter_power: reflection coefficient must lie in (0, 1), got " +
                                std::to_string(zeta));
    return zeta * p_rx;
}

std::vector<double> assign_reflection_coeffs(std::size_t n, double zeta_min, double zeta_max,
                                             Scheme scheme) {
    if (!(zeta_min > 0.0 && zeta_min < 1.0) || !(zeta_max > 0.0 && zeta_max < 1.0) ||
        !(zeta_min < zeta_max))
        throw std::domain_error("assign_reflection_coeffs: need 0 < zeta_min < zeta_max < 1");
    std::vector<double> zetas(n);
    if (scheme == Scheme::Uniform) {
        std::fill(zetas.begin(), zetas.end(), zeta_min);
        return zetas;
    }
    if (n == 1) {
        zetas[0] = zeta_max; // a lone node faces no interference: maximize its power
        return zetas;
    }
    const double step = (zeta_max - zeta_min) / static_cast<double>(n - 1);
    for (std::size_t k = 0; k < n; ++k)
        zetas[k] = zeta_min + static_cast<double>(n - 1 - k) * step;
    return zetas;
}

void sic_order(std::vector<LinkRecord>& records) {
    std::sort(records.begin(), records.end(), [](const LinkRecord& a, const LinkRecord& b) {
        if (a.distance != b.distance)
            return a.distance < b.distance;
        return a.node_id < b.node_id;
    });
}

double sinr(const SubregionRealization& sr, std::size_t position) {
    const std::size_t n = sr.records.size();
    if (position >= n)
        throw std::out_of_range("sinr: position " + std::to_string(position) +
                                " out of range for " + std::to_string(n) + " records");
    const auto power = [&](const LinkRecord& rec) {
        const double h2 = rec.shadow_gain * rec.shadow_gain;
        return sr.p_u_w * rec.zeta * h2 * std::pow(rec.distance, -2.0 * sr.alpha);
    };
    double interference = 0.0;
    for (std::size_t j = position + 1; j < n; ++j)
        interference += power(sr.records[j]);
    return power(sr.records[position]) / (interference + sr.noise_w);
}

DecodeResult decode_subregion(const SubregionRealization& sr, double gamma_linear) {
    const std::size_t n = sr.records.size();
    DecodeResult out;
    out.success.resize(n);
    // Suffix sums keep the chain O(n); the division matches sinr() exactly.
    std::vector<double> powers(n);
    for (std::size_t i = 0; i < n; ++i) {
        const LinkRecord& rec = sr.records[i];
        const double h2 = rec.shadow_gain * rec.shadow_gain;
        powers[i] = sr.p_u_w * rec.zeta * h2 * std::pow(rec.distance, -2.0 * sr.alpha);
    }
    double interference = 0.0;
    for (std::size_t i = n; i-- > 0;) {
        const bool ok = powers[i] / (interference + sr.noise_w) >= gamma_linear;
        out.success[i] = ok;
        out.joint = out.joint && ok;
        interference += powers[i];
    }
    return out;
}

} // namespace bscat
