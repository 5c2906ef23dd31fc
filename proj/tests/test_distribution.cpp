#include <doctest.h>

#include <cmath>
#include <random>

#include "bgumbel/distribution.hpp"
#include "bgumbel/errors.hpp"
#include "bgumbel/special_functions.hpp"
#include "support/oracle_values.hpp"

using namespace bgumbel;

namespace {
bool close(double a, double b, double rel, double abs = 0.0) {
    return std::abs(a - b) <= std::max(abs, rel * std::abs(b));
}
}  // namespace

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(BgParams(0.0, 0.0, 1.0), DomainError);
    CHECK_THROWS_AS(BgParams(0.0, -1.0, 1.0), DomainError);
    CHECK_THROWS_AS(BgParams(NAN, 1.0, 1.0), DomainError);
    CHECK_THROWS_AS(GumbelParams(0.0, 0.0), DomainError);
}

TEST_CASE("normalizer agrees with the integrated weight") {
    for (const auto& row : oracle::kMoments) {
        const BgParams p(row[0], row[1], row[2]);
        CHECK(close(normalizer(p), row[3], 1e-13));
    }
    CHECK(normalizer(BgParams(3.0, 2.0, 0.0)) == doctest::Approx(2.0));
}

TEST_CASE("closed-form CDF against reference quadrature") {
    for (const auto& [mu, s, d, x, want] : oracle::kCdf) {
        const BgParams p(mu, s, d);
        CAPTURE(mu);
        CAPTURE(s);
        CAPTURE(d);
        CAPTURE(x);
        CHECK(close(bg_cdf(p, x), want, 1e-10, 1e-12));
        CHECK(close(bg_survival(p, x), 1.0 - want, 1e-9, 1e-12));
    }
}

TEST_CASE("CDF limits") {
    const BgParams p(1.0, 1.0, 2.0);
    CHECK(bg_cdf(p, -50.0) == 0.0);
    CHECK(bg_cdf(p, 200.0) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(bg_survival(p, 200.0) < 1e-60);
}

TEST_CASE("raw moments against reference quadrature") {
    for (const auto& row : oracle::kMoments) {
        const BgParams p(row[0], row[1], row[2]);
        CAPTURE(row[0]);
        CAPTURE(row[1]);
        CAPTURE(row[2]);
        for (unsigned k = 1; k <= 4; ++k) CHECK(close(bg_moment(p, k), row[3 + k], 1e-11));
        const MomentSet m = bg_moment_set(p);
        CHECK(close(m.mean, row[4], 1e-11));
        CHECK(close(m.second_raw, row[5], 1e-11));
        CHECK(close(m.third_raw, row[6], 1e-11));
        CHECK(close(m.variance, row[8], 1e-10));
    }
    CHECK(bg_moment(BgParams(1.0, 2.0, 0.5), 0) == 1.0);
    CHECK_THROWS_AS(bg_moment(BgParams(1.0, 2.0, 0.5), 5), UnsupportedOrderError);
}

TEST_CASE("population moments of the simulation-study rows") {
    struct Row {
        double mu, sigma, delta, mean, var;
    };
    const Row rows[] = {{-2, 1, -1, -1.0640, 5.0126},
                        {-1, 2, -1, 4.0170, 18.016},
                        {-1, 2, -2, 3.9909, 21.575},
                        {-2, 2, -1, 1.9512, 24.592}};
    for (const auto& r : rows) {
        const MomentSet m = bg_moment_set(BgParams(r.mu, r.sigma, r.delta));
        CHECK(std::abs(m.mean - r.mean) <= 5e-4);
        CHECK(std::abs(m.variance - r.var) <= 5e-3);
    }
}

TEST_CASE("skewness and kurtosis of the Gumbel limit") {
    const MomentSet m = bg_moment_set(BgParams(0.7, 1.3, 0.0));
    CHECK(close(m.skewness, 12.0 * std::sqrt(6.0) * constants::zeta3 / std::pow(constants::pi, 3), 1e-12));
    CHECK(close(m.kurtosis, 5.4, 1e-12));
}

TEST_CASE("moment generating function") {
    for (const auto& [mu, s, d, t, want] : oracle::kMgf) {
        CAPTURE(mu);
        CAPTURE(d);
        CAPTURE(t);
        CHECK(close(bg_mgf(BgParams(mu, s, d), t), want, 1e-11));
    }
    CHECK_THROWS_AS(bg_mgf(BgParams(0.0, 1.0, 1.0), 0.1), DomainError);
    CHECK(bg_mgf(BgParams(0.0, 1.0, 0.0), 0.5) == doctest::Approx(std::tgamma(0.5)));
    CHECK_THROWS_AS(bg_mgf(BgParams(0.0, 1.0, 0.0), 1.0), DomainError);
}

TEST_CASE("exponential moments are derivatives of the MGF") {
    const BgParams p(-1.0, 2.0, -1.0);
    const double t = -1.3;
    const double h = 1e-4;
    const double d1 = (bg_mgf(p, t + h) - bg_mgf(p, t - h)) / (2.0 * h);
    const double d2 = (bg_mgf(p, t + h) - 2.0 * bg_mgf(p, t) + bg_mgf(p, t - h)) / (h * h);
    CHECK(close(bg_exp_moment(p, 0, t), bg_mgf(p, t), 1e-12));
    CHECK(close(bg_exp_moment(p, 1, t), d1, 1e-7));
    CHECK(close(bg_exp_moment(p, 2, t), d2, 1e-5));
    CHECK_THROWS_AS(bg_exp_moment(p, 2, -0.9), DomainError);
    CHECK_THROWS_AS(bg_exp_moment(p, 3, -5.0), UnsupportedOrderError);
}

TEST_CASE("standardized exponential moments") {
    const BgParams p(0.5, 0.7, 0.3);
    // E[exp(-b z)] = exp(b mu / sigma) M(-b / sigma)
    for (double b : {0.5, 1.0, 2.0}) {
        CHECK(close(detail::standardized_exp_moment(p, 0, b), std::exp(b * p.mu / p.sigma) * bg_mgf(p, -b / p.sigma),
                    1e-12));
    }
    // E[z] recovered at b = 0
    CHECK(close(detail::standardized_exp_moment(p, 1, 0.0), (bg_moment_set(p).mean - p.mu) / p.sigma, 1e-12));
}

TEST_CASE("Gumbel reduction at delta = 0") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(-3.0, 3.0);
    for (int i = 0; i < 20; ++i) {
        const double mu = u(rng);
        const double s = 0.2 + std::abs(u(rng));
        const double x = mu + s * u(rng);
        const BgParams p(mu, s, 0.0);
        const GumbelParams g(mu, s);
        CHECK(close(bg_pdf(p, x), gumbel_pdf(g, x), 1e-12));
        CHECK(close(bg_cdf(p, x), gumbel_cdf(g, x), 1e-12, 1e-14));
        const MomentSet m = bg_moment_set(p);
        CHECK(close(m.mean, mu + s * constants::euler_gamma, 1e-12, 1e-13));
        CHECK(close(m.variance, s * s * constants::pi * constants::pi / 6.0, 1e-12));
    }
}

TEST_CASE("mixture weights") {
    const MixtureWeights w = mixture_weights(BgParams(-2.0, 1.0, 1.0));
    CHECK(w.in_regime);
    CHECK(w.p[0] + w.p[1] + w.p[2] == doctest::Approx(1.0).epsilon(1e-15));
    for (double v : w.p) CHECK((v >= 0.0 && v <= 1.0));
    CHECK_FALSE(mixture_weights(BgParams(1.0, 1.0, 1.0)).in_regime);
}

TEST_CASE("weighted Gumbel CDFs") {
    const GumbelParams g(0.3, 1.2);
    CHECK(close(weighted_gumbel_cdf(g, 0, 0.9), gumbel_cdf(g, 0.9), 1e-14));
    CHECK(weighted_gumbel_cdf(g, 2, 60.0) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(weighted_gumbel_cdf(g, 2, -20.0) == 0.0);
    // y^2 f(y) on (-inf, 0]
    const double lower = (g.mu * g.mu * incomplete_log_moment(0, std::exp(g.mu / g.sigma), kInfinity) +
                          2.0 * g.mu * g.sigma * incomplete_log_moment(1, std::exp(g.mu / g.sigma), kInfinity) +
                          g.sigma * g.sigma * incomplete_log_moment(2, std::exp(g.mu / g.sigma), kInfinity)) /
                         gumbel_raw_moment(g, 2);
    CHECK(close(weighted_gumbel_cdf(g, 2, 0.0), lower, 1e-12));
    const GumbelParams centered(-constants::euler_gamma, 1.0);
    CHECK_THROWS_AS(weighted_gumbel_cdf(centered, 1, 0.0), DegenerateWeightError);
    CHECK_THROWS_AS(weighted_gumbel_cdf(g, 3, 0.0), UnsupportedOrderError);
}

TEST_CASE("quantile inverts the CDF") {
    const BgParams p(1.0, 1.0, 2.0);
    for (double u : {0.01, 0.3, 0.5, 0.9, 0.999}) {
        CHECK(bg_cdf(p, detail::bg_quantile(p, u)) == doctest::Approx(u).epsilon(1e-8));
    }
}
