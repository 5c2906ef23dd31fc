#include <doctest.h>

#include <cmath>

#include "bgumbel/errors.hpp"
#include "bgumbel/model_selection.hpp"
#include "bgumbel/sampling.hpp"

using namespace bgumbel;

TEST_CASE("config validation and defaults") {
    McmcConfig cfg;
    cfg.burn_in = cfg.n_iterations;
    CHECK_THROWS_AS(cfg.validate(), DomainError);
    cfg = {};
    cfg.proposal_scale = 0.0;
    CHECK_THROWS_AS(cfg.validate(), DomainError);
    cfg = {};
    cfg.thin = 0;
    CHECK_THROWS_AS(cfg.validate(), DomainError);

    const BgParams p(-2.0, 1.0, -1.0);
    const McmcConfig d = McmcConfig::defaults_for(p, 1000, 5);
    CHECK(d.burn_in == 100);
    CHECK(d.initial_point == -2.0);
    CHECK(d.proposal_scale == doctest::Approx(2.4 * std::sqrt(bg_moment_set(p).variance)));
}

TEST_CASE("metropolis chains are deterministic per seed") {
    const BgParams p(-2.0, 1.0, -1.0);
    const McmcConfig cfg = McmcConfig::defaults_for(p, 5000, 42);
    const Chain a = mh_sample(p, cfg);
    const Chain b = mh_sample(p, cfg);
    CHECK(a.draws == b.draws);
    CHECK(a.draws.size() == 4500);
    CHECK(a.acceptance_rate > 0.1);
    CHECK(a.acceptance_rate < 0.9);
    CHECK(a.seed == 42);
    McmcConfig other = cfg;
    other.seed = 43;
    CHECK(mh_sample(p, other).draws != a.draws);
}

TEST_CASE("thinning keeps every k-th state") {
    const BgParams p(0.0, 1.0, 0.5);
    McmcConfig cfg = McmcConfig::defaults_for(p, 1000, 1);
    const Chain full = mh_sample(p, cfg);
    cfg.thin = 3;
    const Chain thin = mh_sample(p, cfg);
    REQUIRE(thin.draws.size() == 300);
    for (std::size_t i = 0; i < thin.draws.size(); ++i) CHECK(thin.draws[i] == full.draws[3 * i]);
}

TEST_CASE("poorly tuned chains are flagged") {
    const BgParams p(0.0, 1.0, 0.0);
    McmcConfig cfg = McmcConfig::defaults_for(p, 2000, 3);
    cfg.proposal_scale = 500.0;
    CHECK(mh_sample(p, cfg).acceptance_flagged());
}

TEST_CASE("metropolis draws follow the target") {
    const BgParams p(-1.0, 2.0, -2.0);
    const Chain c = mh_sample(p, McmcConfig::defaults_for(p, 110000, 7));
    const TestResult ks = ks_test(c.draws, [&](double x) { return bg_cdf(p, x); });
    CHECK(ks.statistic < 0.01);
}

TEST_CASE("chain summary") {
    const std::vector<double> constant(50, 3.25);
    const ChainSummary s = chain_summary(constant);
    CHECK(s.mean == 3.25);
    CHECK(s.variance == 0.0);
    const std::vector<double> v{1.0, 2.0, 3.0, 4.0};
    const ChainSummary t = chain_summary(v);
    CHECK(t.mean == 2.5);
    CHECK(t.variance == doctest::Approx(5.0 / 3.0));
    const BgParams p(-2.0, 1.0, -1.0);
    const MomentBias b = t.bias_vs(p);
    CHECK(b.bias_mean == doctest::Approx(2.5 - bg_moment_set(p).mean));
    CHECK_THROWS_AS(chain_summary(std::vector<double>{}), DataError);
}

TEST_CASE("Gumbel chain mean converges") {
    const BgParams p(0.0, 1.0, 0.0);
    const Chain c = mh_sample(p, McmcConfig::defaults_for(p, 110000, 9));
    const std::span<const double> all(c.draws);
    const double bias_small = std::abs(chain_summary(all.first(1000)).bias_vs(p).bias_mean);
    const double bias_large = std::abs(chain_summary(all).bias_vs(p).bias_mean);
    CHECK(bias_large < 0.03);
    CHECK(bias_large < bias_small + 0.01);
}

TEST_CASE("mixture representation sampler") {
    CHECK_THROWS_AS(representation_sample(BgParams(1.0, 1.0, 1.0), 10, 1), RegimeError);
    const BgParams p(-2.0, 1.0, 1.0);
    const auto a = representation_sample(p, 2000, 5);
    CHECK(a == representation_sample(p, 2000, 5));
    const auto big = representation_sample(p, 200000, 6);
    const TestResult ks = ks_test(big, [&](double x) { return bg_cdf(p, x); });
    CHECK(ks.statistic < 1.63 / std::sqrt(200000.0));

    const BgParams q(1.0, 1.5, -0.8);  // delta < 0, positive Gumbel mean
    const auto other = representation_sample(q, 50000, 8);
    CHECK(ks_test(other, [&](double x) { return bg_cdf(q, x); }).statistic < 1.63 / std::sqrt(50000.0));
}
