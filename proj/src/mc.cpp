// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 bscat authors

#include "bscat/mc.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "bscat/geometry.hpp"
#include "bscat/rng.hpp"

namespace bscat {

McEstimate mc_subregion_outage(const SubregionInstance& inst, const LinkParams& params,
                               std::uint64_t trials, std::uint64_t seed) {
    if (trials < 1)
        throw std::domain_error("mc_subregion_outage: trial count must be >= 1");
    McEstimate est;
    est.trials = trials;
    if (inst.records.empty())
        return est;

    SubregionRealization sr = to_realization(inst, params);
    // One shadowing stream per node, indexed by trial: draws depend only on
    // (seed, node id, trial), never on evaluation order.
    std::vector<CounterRng> shadowing;
    shadowing.reserve(sr.records.size());
    for (const LinkRecord& rec : sr.records)
        shadowing.emplace_back(seed, stream::kShadowing, static_cast<std::uint64_t>(rec.node_id));

    std::uint64_t failures = 0;
    for (std::uint64_t t = 0; t < trials; ++t) {
        for (std::size_t k = 0; k < sr.records.size(); ++k) {
            const double g = params.sigma_db * shadowing[k].normal(t);
            sr.records[k].shadow_gain = std::pow(10.0, g / 10.0);
        }
        if (!decode_subregion(sr, params.gamma_linear).joint)
            ++failures;
    }
    est.outage_hat = static_cast<double>(failures) / static_cast<double>(trials);
    est.std_err = std::sqrt(est.outage_hat * (1.0 - est.outage_hat) / static_cast<double>(trials));
    est.ci99 = 2.576 * est.std_err;
    return est;
}

McThroughput mc_throughput(double h, const NetworkConfig& cfg) {
    const TilingPlan plan = build_tiling(h, cfg);
    const std::vector<SubregionInstance> instances = make_instances(plan, cfg);
    const LinkParams params = LinkParams::from(cfg);
    const double w = static_cast<double>(plan.total_subregions());

    McThroughput out;
    double sum = 0.0;
    double var = 0.0;
    for (const SubregionInstance& inst : instances) {
        const McEstimate est = mc_subregion_outage(inst, params, cfg.trials, cfg.seed);
        const double n_l = static_cast<double>(inst.n_l());
        sum += n_l * (1.0 - est.outage_hat);
        var += n_l * n_l * est.std_err * est.std_err;
        out.per_subregion.push_back(est);
    }
    out.throughput_bps = cfg.rate_bps / w * sum;
    out.std_err = cfg.rate_bps / w * std::sqrt(var);
    return out;
}

} // namespace bscat
