#pragma once

#include <array>

#include "bgumbel/quadrature.hpp"

namespace bgumbel {

/// Location/scale pair of the classical Gumbel (maximum) law.
struct GumbelParams {
    double mu = 0.0;
    double sigma = 1.0;

    GumbelParams() = default;
    /// Throws DomainError unless sigma > 0 and mu is finite.
    GumbelParams(double mu, double sigma);
};

/// Parameter triple (mu, sigma, delta) of the bimodal Gumbel law.
///
/// The density is [(1 - delta x)^2 + 1] f_G(x; mu, sigma) / Z, so delta = 0
/// recovers the Gumbel law exactly.
struct BgParams {
    double mu = 0.0;
    double sigma = 1.0;
    double delta = 0.0;

    BgParams() = default;
    /// Throws DomainError unless sigma > 0 and mu, delta are finite.
    BgParams(double mu, double sigma, double delta);

    GumbelParams gumbel() const { return {mu, sigma}; }
};

/// Raw moments and standardized shape coefficients.
struct MomentSet {
    double mean = 0.0;
    double second_raw = 0.0;
    double third_raw = 0.0;
    double variance = 0.0;
    double skewness = 0.0;
    double kurtosis = 0.0;  ///< fourth standardized moment (not excess)
};

/// Mixing probabilities of the three weighted Gumbel components.
struct MixtureWeights {
    std::array<double, 3> p{};
    /// True when delta * (mu + sigma * gamma) < 0, i.e. every weight is in [0, 1].
    bool in_regime = false;
};

// Gumbel building blocks.
double gumbel_pdf(const GumbelParams& g, double x);
double gumbel_log_pdf(const GumbelParams& g, double x);
double gumbel_cdf(const GumbelParams& g, double x);
/// E(Y^k) for Y ~ Gumbel(mu, sigma), k = 0..6.
double gumbel_raw_moment(const GumbelParams& g, unsigned k);

/// Z = 1 + delta^2 sigma^2 pi^2 / 6 + (delta mu + delta sigma gamma - 1)^2.
double normalizer(const BgParams& p);

double bg_pdf(const BgParams& p, double x);
double bg_log_pdf(const BgParams& p, double x);

/// Closed-form CDF built from I(0..2; e^{-(x-mu)/sigma}, inf).
///
/// Far to the left (exponent argument above 700) the CDF is below 1e-300 and
/// 0 is returned.
double bg_cdf(const BgParams& p, double x, const QuadratureSpec& spec = {});

/// 1 - CDF evaluated from the complementary incomplete moments, accurate in the right tail.
double bg_survival(const BgParams& p, double x, const QuadratureSpec& spec = {});

/// E(Y^k 1{Y <= x}) / E(Y^k) for Y ~ Gumbel(mu, sigma), k = 0..2.
///
/// Throws DegenerateWeightError when |E(Y^k)| < 1e-12. For k = 1 the weight
/// y changes sign, so the ratio may leave [0, 1].
double weighted_gumbel_cdf(const GumbelParams& g, unsigned k, double x, const QuadratureSpec& spec = {});

MixtureWeights mixture_weights(const BgParams& p);

/// E(X^k), k = 0..4, from the double binomial sum over I(i; 0, inf).
double bg_moment(const BgParams& p, unsigned k);

/// Mean and second/third raw moments from their explicit closed forms,
/// skewness and kurtosis from the binomial expansion over bg_moment.
MomentSet bg_moment_set(const BgParams& p);

/// M(t) = E[exp(tX)] for t < 0 (t < 1/sigma when delta = 0).
double bg_mgf(const BgParams& p, double t);

/// E[X^m exp(tX)] for m = 0..2 and t < min(0, -m/sigma).
double bg_exp_moment(const BgParams& p, unsigned m, double t);

namespace detail {

/// The gamma-derivative expression behind bg_exp_moment without its
/// domain check; valid for any t < 1/sigma.
double exp_moment_closed_form(const BgParams& p, unsigned m, double t);

/// E[z^a exp(-b z)] with z = (X - mu)/sigma, X ~ BG(p), for b > -1 and a + 2 <= 4.
double standardized_exp_moment(const BgParams& p, unsigned a, double b);

/// Bisection inverse of bg_cdf to 1e-10 in x; internal helper only.
double bg_quantile(const BgParams& p, double u, const QuadratureSpec& spec = {});

}  // namespace detail

}  // namespace bgumbel
