// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 bscat authors
//
// Monte Carlo estimation of the joint decode event, without the
// independence or sum-approximation shortcuts of the closed-form chain:
// every trial draws fresh per-node shadowing, runs the full SIC chain and
// counts joint failures. Shadowing draws are keyed by (seed, node id, trial
// number), so sweeps over thresholds, schemes or estimator settings reuse
// identical channel realizations (common random numbers) and paired
// comparisons are exactly monotone where the underlying event is.

#pragma once

#include <cstdint>
#include <vector>

#include "bscat/config.hpp"
#include "bscat/link.hpp"
#include "bscat/scenario.hpp"

namespace bscat {

/// Binomial estimate of an outage probability.
struct McEstimate {
    double outage_hat = 0.0;
    std::uint64_t trials = 0;
    double std_err = 0.0; ///< sqrt(p (1-p) / trials)
    double ci99 = 0.0;    ///< 2.576 * std_err (99% normal half-width)
};

/// Estimate the joint outage of one sub-region instance over `trials`
/// independent shadowing realizations. Deterministic in (instance, seed,
/// trials). An empty sub-region never fails.
McEstimate mc_subregion_outage(const SubregionInstance& inst, const LinkParams& params,
                               std::uint64_t trials, std::uint64_t seed);

/// Network throughput at one altitude with Monte Carlo outage estimates.
struct McThroughput {
    double throughput_bps = 0.0;
    double std_err = 0.0; ///< propagated from the per-sub-region estimates
    std::vector<McEstimate> per_subregion;
};

/// Build the tiling and balanced instances for altitude h, estimate each
/// sub-region's outage with cfg.trials trials, and combine into the
/// frame-normalized throughput (rate / W) * sum_l N_l (1 - outage_l).
McThroughput mc_throughput(double h, const NetworkConfig& cfg);

} // namespace bscat
