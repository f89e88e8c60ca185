// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 bscat authors

#include "bscat/outage.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace bscat {

LogNormalParams z_params(double zeta, double d, double alpha, double sigma_db) {
    if (!(zeta > 0.0 && zeta < 1.0))
        throw std::domain_error("z_params: reflection coefficient must lie in (0, 1), got " +
                                std::to_string(zeta));
    if (!(d > 0.0))
        throw std::domain_error("z_params: distance must be > 0, got " + std::to_string(d));
    if (!(sigma_db >= 0.0))
        throw std::domain_error("z_params: shadowing sigma must be >= 0, got " +
                                std::to_string(sigma_db));
    constexpr double a = std::numbers::ln10 / 10.0;
    LogNormalParams p;
    p.mu = std::log(zeta) - 2.0 * alpha * std::log(d);
    p.sigma2 = 4.0 * a * a * sigma_db * sigma_db;
    return p;
}

LogNormalParams fenton_wilkinson(std::span<const LogNormalParams> components) {
    if (components.empty())
        throw std::domain_error("fenton_wilkinson: component list is empty");
    if (components.size() == 1)
        return components[0];
    double sum_mean = 0.0;
    double sum_var = 0.0;
    for (const LogNormalParams& c : components) {
        sum_mean += std::exp(c.mu + 0.5 * c.sigma2);
        sum_var += std::exp(2.0 * c.mu + c.sigma2) * std::expm1(c.sigma2);
    }
    LogNormalParams out;
    out.sigma2 = std::log1p(sum_var / (sum_mean * sum_mean));
    out.mu = std::log(sum_mean) - 0.5 * out.sigma2;
    return out;
}

LogNormalParams sinr_params(std::size_t position, std::span<const LogNormalParams> z,
                            double noise_w, double p_u_w) {
    const std::size_t n = z.size();
    if (position >= n)
        throw std::out_of_range("sinr_params: position " + std::to_string(position) +
                                " out of range for " + std::to_string(n) + " components");
    LogNormalParams out;
    if (position + 1 == n) {
        // Noise-limited last position: SNR = P_u z / noise.
        out.mu = z[position].mu - std::log(noise_w / p_u_w);
        out.sigma2 = z[position].sigma2;
        return out;
    }
    const LogNormalParams denom = fenton_wilkinson(z.subspan(position + 1));
    out.mu = z[position].mu - denom.mu;
    out.sigma2 = z[position].sigma2 + denom.sigma2;
    return out;
}

double decode_prob(const LogNormalParams& params, double gamma_linear) {
    if (!(gamma_linear > 0.0))
        throw std::domain_error("decode_prob: threshold must be > 0, got " +
                                std::to_string(gamma_linear));
    const double lg = std::log(gamma_linear);
    if (params.sigma2 <= 0.0)
        return params.mu >= lg ? 1.0 : 0.0;
    const double p = 0.5 * std::erfc((lg - params.mu) / std::sqrt(2.0 * params.sigma2));
    return std::clamp(p, 0.0, 1.0);
}

SubregionOutage subregion_outage(const SubregionInstance& inst, const LinkParams& params) {
    SubregionOutage out;
    if (inst.records.empty())
        return out;
    std::vector<LogNormalParams> z;
    z.reserve(inst.records.size());
    for (const LinkRecord& rec : inst.records)
        z.push_back(z_params(rec.zeta, rec.distance, params.alpha, params.sigma_db));
    double joint = 1.0;
    out.decode_probs.reserve(z.size());
    for (std::size_t i = 0; i < z.size(); ++i) {
        const double p = decode_prob(sinr_params(i, z, params.noise_w, params.p_u_w),
                                     params.gamma_linear);
        out.decode_probs.push_back(p);
        joint *= p;
    }
    out.outage = std::clamp(1.0 - joint, 0.0, 1.0);
    return out;
}

} // namespace bscat
