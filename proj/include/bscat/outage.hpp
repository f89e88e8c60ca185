// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 bscat authors
//
// Closed-form per-sub-region outage. The received backscatter power of each
// node, normalized by the carrier power, is z = zeta * h^2 * d^-2alpha; with
// dB-Gaussian shadowing, z is log-normal. Under SIC the decode SINR of each
// position is z_i over the sum of the weaker nodes' z_j (thermal noise is
// kept only at the last position, where no interference remains). The sum is
// matched by a single log-normal via its first two moments, the ratio of two
// log-normals is again log-normal, and the decode probability is a Gaussian
// tail in log space. Per-position successes are treated as independent, so
// the sub-region outage is one minus their product. The whole chain lives in
// natural-log space; the Monte Carlo estimator is the accuracy reference.

#pragma once

#include <span>
#include <vector>

#include "bscat/link.hpp"
#include "bscat/scenario.hpp"

namespace bscat {

/// Parameters of ln(Z) for a log-normal variable Z: Z = exp(N(mu, sigma2)).
/// sigma2 = 0 degenerates to the point mass at exp(mu).
struct LogNormalParams {
    double mu = 0.0;
    double sigma2 = 0.0;
};

/// Log-normal parameters of one node's normalized backscatter power
/// z = zeta * h^2 * d^-2alpha: mu = ln(zeta) - 2 alpha ln(d) and
/// sigma2 = 4 a^2 sigma_db^2 with a = ln(10)/10, because the one-way
/// shadowing gain is h = 10^(g/10) with g ~ N(0, sigma_db^2) in dB.
LogNormalParams z_params(double zeta, double d, double alpha, double sigma_db);

/// Moment-matched log-normal approximation of a sum of independent
/// log-normals: the result has the exact sum's mean and variance. A single
/// component is returned unchanged.
LogNormalParams fenton_wilkinson(std::span<const LogNormalParams> components);

/// Log-normal approximation of the SINR at `position` (0-based) in SIC
/// order: for interior positions the denominator is the moment-matched sum
/// of the weaker nodes' powers; the last position is noise-limited with
/// SNR = P_u z / noise.
LogNormalParams sinr_params(std::size_t position, std::span<const LogNormalParams> z,
                            double noise_w, double p_u_w);

/// Pr(Z >= gamma) for Z = exp(N(mu, sigma2)): a Gaussian upper tail in
/// ln(gamma); the indicator exp(mu) >= gamma when sigma2 = 0.
double decode_prob(const LogNormalParams& params, double gamma_linear);

/// Per-position decode probabilities and their complement-product outage.
struct SubregionOutage {
    std::vector<double> decode_probs;
    double outage = 0.0;
};

/// Closed-form outage of one sub-region instance: decode probabilities per
/// SIC position, combined under the independence approximation. An empty
/// sub-region never fails (outage 0).
SubregionOutage subregion_outage(const SubregionInstance& inst, const LinkParams& params);

} // namespace bscat
