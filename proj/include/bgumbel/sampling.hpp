#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "bgumbel/distribution.hpp"

namespace bgumbel {

/// Random-walk Metropolis settings. n_iterations counts burn-in; after it,
/// every thin-th state is kept.
struct McmcConfig {
    std::size_t n_iterations = 100000;
    std::size_t burn_in = 10000;
    double proposal_scale = 1.0;
    std::uint64_t seed = 0;
    double initial_point = 0.0;
    std::size_t thin = 1;

    /// Throws DomainError unless n_iterations > burn_in, thin >= 1 and proposal_scale > 0.
    void validate() const;

    /// Gaussian proposal with scale 2.4 sd(X) (sigma if the variance is not
    /// usable), 10% burn-in, started at the Gumbel mode mu.
    static McmcConfig defaults_for(const BgParams& p, std::size_t n_iterations, std::uint64_t seed);
};

struct Chain {
    std::vector<double> draws;  ///< post burn-in, thinned
    double acceptance_rate = 0.0;
    std::uint64_t seed = 0;

    /// Acceptance outside [0.1, 0.6] usually means a badly tuned proposal.
    bool acceptance_flagged() const { return acceptance_rate < 0.1 || acceptance_rate > 0.6; }
};

struct MomentBias {
    double bias_mean = 0.0;
    double bias_variance = 0.0;
};

struct ChainSummary {
    double mean = 0.0;
    double variance = 0.0;  ///< n - 1 denominator

    /// Sample minus population (closed-form) moments.
    MomentBias bias_vs(const BgParams& p) const;
};

/// Random-walk Metropolis targeting bg_log_pdf. The generator is
/// std::mt19937_64 seeded with cfg.seed; a fixed seed gives identical draws.
Chain mh_sample(const BgParams& p, const McmcConfig& cfg);

/// Draws through the three-component weighted Gumbel mixture.
///
/// Requires delta (mu + sigma gamma) < 0, otherwise RegimeError. The Y_1
/// component puts negative mass where y has the opposite sign of E(Y), so
/// it is sampled from its positive part and the surplus is removed with an
/// exact accept/reject step; each component is drawn by safeguarded Newton
/// inversion of its CDF to 1e-10.
std::vector<double> representation_sample(const BgParams& p, std::size_t n, std::uint64_t seed);

ChainSummary chain_summary(std::span<const double> draws);
inline ChainSummary chain_summary(const Chain& c) { return chain_summary(c.draws); }

}  // namespace bgumbel
