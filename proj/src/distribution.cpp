#include "bgumbel/distribution.hpp"

#include <algorithm>
#include <cmath>

#include "bgumbel/errors.hpp"
#include "bgumbel/special_functions.hpp"

namespace bgumbel {

namespace {

using constants::euler_gamma;
using constants::pi;

constexpr double kPiSq6 = pi * pi / 6.0;
// exp(-700) is still a normal double; beyond it CDF terms are below 1e-300.
constexpr double kMaxExpArg = 700.0;

double binom(unsigned n, unsigned k) {
    double r = 1.0;
    for (unsigned i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

double ipow(double x, unsigned n) {
    double r = 1.0;
    for (unsigned i = 0; i < n; ++i) r *= x;
    return r;
}

// E(Y^k 1{Y <= x}) written through a = exp(-(x - mu)/sigma).
double truncated_gumbel_moment(const GumbelParams& g, unsigned k, double a, const QuadratureSpec& spec) {
    double sum = 0.0;
    for (unsigned i = 0; i <= k; ++i) {
        const double im = a == 0.0 ? log_moment_constant(i) : incomplete_log_moment(i, a, kInfinity, spec);
        sum += binom(k, i) * ipow(g.mu, k - i) * ipow(g.sigma, i) * im;
    }
    return sum;
}

}  // namespace

GumbelParams::GumbelParams(double mu_, double sigma_) : mu(mu_), sigma(sigma_) {
    if (!std::isfinite(mu) || !std::isfinite(sigma) || !(sigma > 0.0)) {
        throw DomainError("GumbelParams: requires finite mu and sigma > 0");
    }
}

BgParams::BgParams(double mu_, double sigma_, double delta_) : mu(mu_), sigma(sigma_), delta(delta_) {
    if (!std::isfinite(mu) || !std::isfinite(delta) || !std::isfinite(sigma) || !(sigma > 0.0)) {
        throw DomainError("BgParams: requires finite mu, delta and sigma > 0");
    }
}

double gumbel_log_pdf(const GumbelParams& g, double x) {
    const double z = (x - g.mu) / g.sigma;
    return -std::log(g.sigma) - z - std::exp(-z);
}

double gumbel_pdf(const GumbelParams& g, double x) { return std::exp(gumbel_log_pdf(g, x)); }

double gumbel_cdf(const GumbelParams& g, double x) { return std::exp(-std::exp(-(x - g.mu) / g.sigma)); }

double gumbel_raw_moment(const GumbelParams& g, unsigned k) {
    if (k > 6) throw UnsupportedOrderError("gumbel_raw_moment: order must be 0..6");
    return truncated_gumbel_moment(g, k, 0.0, {});
}

double normalizer(const BgParams& p) {
    const double d = p.delta;
    const double shift = d * p.mu + d * p.sigma * euler_gamma - 1.0;
    return 1.0 + d * d * p.sigma * p.sigma * kPiSq6 + shift * shift;
}

double bg_log_pdf(const BgParams& p, double x) {
    const double u = 1.0 - p.delta * x;
    const double z = (x - p.mu) / p.sigma;
    return std::log(u * u + 1.0) - std::log(p.sigma) - std::log(normalizer(p)) - z - std::exp(-z);
}

double bg_pdf(const BgParams& p, double x) { return std::exp(bg_log_pdf(p, x)); }

double bg_cdf(const BgParams& p, double x, const QuadratureSpec& spec) {
    const double z = (x - p.mu) / p.sigma;
    if (-z > std::log(kMaxExpArg)) return 0.0;
    const double a = std::exp(-z);
    const double dm = p.delta * p.mu;
    const double i0 = std::exp(-a);
    const double i1 = incomplete_log_moment(1, a, kInfinity, spec);
    const double i2 = a == 0.0 ? log_moment_constant(2) : incomplete_log_moment(2, a, kInfinity, spec);
    // sigma * I1 = (x - mu) exp(-a) - sigma Gamma(0, a).
    const double num = (2.0 - dm * (2.0 - dm)) * i0 - 2.0 * p.delta * (1.0 - dm) * p.sigma * i1 +
                       p.delta * p.delta * p.sigma * p.sigma * i2;
    const double f = num / normalizer(p);
    return std::clamp(f, 0.0, 1.0);
}

double bg_survival(const BgParams& p, double x, const QuadratureSpec& spec) {
    const double z = (x - p.mu) / p.sigma;
    if (-z > std::log(kMaxExpArg)) return 1.0;
    const double a = std::exp(-z);
    if (a == 0.0) return 0.0;
    const double dm = p.delta * p.mu;
    const double j0 = -std::expm1(-a);
    const double j1 = incomplete_log_moment(1, 0.0, a, spec);
    const double j2 = incomplete_log_moment(2, 0.0, a, spec);
    const double num = (2.0 - dm * (2.0 - dm)) * j0 - 2.0 * p.delta * (1.0 - dm) * p.sigma * j1 +
                       p.delta * p.delta * p.sigma * p.sigma * j2;
    return std::clamp(num / normalizer(p), 0.0, 1.0);
}

double weighted_gumbel_cdf(const GumbelParams& g, unsigned k, double x, const QuadratureSpec& spec) {
    if (k > 2) throw UnsupportedOrderError("weighted_gumbel_cdf: k must be 0..2");
    const double denom = truncated_gumbel_moment(g, k, 0.0, spec);
    if (std::abs(denom) < 1e-12) {
        throw DegenerateWeightError("weighted_gumbel_cdf: E(Y^k) vanishes, the weighted law is undefined");
    }
    const double z = (x - g.mu) / g.sigma;
    if (-z > std::log(kMaxExpArg)) return 0.0;
    const double a = std::exp(-z);
    return truncated_gumbel_moment(g, k, a, spec) / denom;
}

MixtureWeights mixture_weights(const BgParams& p) {
    const double z = normalizer(p);
    const double mean_y = p.mu + p.sigma * euler_gamma;
    MixtureWeights w;
    w.p[0] = 2.0 / z;
    w.p[1] = -2.0 * mean_y * p.delta / z;
    w.p[2] = (p.sigma * p.sigma * kPiSq6 + mean_y * mean_y) * p.delta * p.delta / z;
    w.in_regime = p.delta * mean_y < 0.0;
    return w;
}

double bg_moment(const BgParams& p, unsigned k) {
    if (k > 4) throw UnsupportedOrderError("bg_moment: order must be 0..4");
    if (k == 0) return 1.0;
    const double d = p.delta;
    const double m = p.mu;
    const double s = p.sigma;
    double num = d * d * ipow(s, k + 2) * log_moment_constant(k + 2) -
                 d * ipow(s, k + 1) * (2.0 - d * m * (k + 2)) * log_moment_constant(k + 1);
    for (unsigned i = 0; i <= k; ++i) {
        const double c = 2.0 * binom(k, i) - 2.0 * d * m * binom(k + 1, i) + d * d * m * m * binom(k + 2, i);
        num += ipow(s, i) * ipow(m, k - i) * c * log_moment_constant(i);
    }
    return num / normalizer(p);
}

MomentSet bg_moment_set(const BgParams& p) {
    const double d = p.delta;
    const double m = p.mu;
    const double s = p.sigma;
    const double g = euler_gamma;
    const double dm = d * m;
    const double i2 = log_moment_constant(2);
    const double i3 = log_moment_constant(3);
    const double i4 = log_moment_constant(4);
    const double i5 = log_moment_constant(5);
    const double z = normalizer(p);

    MomentSet out;
    out.mean = (d * d * ipow(s, 3) * i3 - d * s * s * (2.0 - 3.0 * dm) * i2 + m * (2.0 - dm * (2.0 - dm)) +
                s * (2.0 - dm * (4.0 - 3.0 * dm)) * g) /
               z;
    out.second_raw = (d * d * ipow(s, 4) * i4 - 2.0 * d * ipow(s, 3) * (1.0 - 2.0 * dm) * i3 +
                      m * m * (2.0 - dm * (2.0 - dm)) + 2.0 * s * m * (2.0 - dm * (3.0 - 2.0 * dm)) * g +
                      2.0 * s * s * (1.0 - 3.0 * dm * (1.0 - dm)) * i2) /
                     z;
    out.third_raw = (d * d * ipow(s, 5) * i5 + ipow(m, 3) * (2.0 - dm * (2.0 - dm)) +
                     s * m * m * (6.0 - dm * (8.0 - 5.0 * dm)) * g +
                     2.0 * s * s * m * (3.0 - dm * (6.0 - 5.0 * dm)) * i2 +
                     2.0 * ipow(s, 3) * (1.0 - dm * (4.0 - 5.0 * dm)) * i3 -
                     d * ipow(s, 4) * (2.0 - 5.0 * dm) * i4) /
                    z;
    out.variance = out.second_raw - out.mean * out.mean;

    // E[((X - EX)/sd)^n] = sum_k C(n,k) E(X^k) (-EX)^{n-k} / Var^{n/2}
    const std::array<double, 5> raw = {1.0, out.mean, out.second_raw, out.third_raw, bg_moment(p, 4)};
    auto standardized = [&](unsigned n) {
        double acc = 0.0;
        for (unsigned k = 0; k <= n; ++k) acc += binom(n, k) * raw[k] * ipow(-out.mean, n - k);
        return acc / std::pow(out.variance, 0.5 * n);
    };
    out.skewness = standardized(3);
    out.kurtosis = standardized(4);
    return out;
}

namespace detail {

double exp_moment_closed_form(const BgParams& p, unsigned m, double t) {
    if (m > 2) throw UnsupportedOrderError("exp moment: m must be 0..2 (needs Gamma derivatives up to order 4)");
    const double d = p.delta;
    const double mu = p.mu;
    const double s = p.sigma;
    const double arg = 1.0 - s * t;
    if (!(arg > 0.0)) throw DomainError("exp moment: requires t < 1/sigma");
    const double sign = (m % 2 == 0) ? 1.0 : -1.0;  // (-1)^{m+2}
    double num = sign * (d * d * ipow(s, m + 2) * gamma_deriv(m + 2, arg) +
                         d * ipow(s, m + 1) * (2.0 - d * mu * (m + 2)) * gamma_deriv(m + 1, arg));
    for (unsigned i = 0; i <= m; ++i) {
        const double c = 2.0 * binom(m, i) - 2.0 * d * mu * binom(m + 1, i) + d * d * mu * mu * binom(m + 2, i);
        num += ((i % 2 == 0) ? 1.0 : -1.0) * ipow(s, i) * ipow(mu, m - i) * c * gamma_deriv(i, arg);
    }
    return std::exp(t * mu) * num / normalizer(p);
}

double standardized_exp_moment(const BgParams& p, unsigned a, double b) {
    if (a + 2 > 4) throw UnsupportedOrderError("standardized_exp_moment: a must be 0..2");
    if (!(b > -1.0)) throw DomainError("standardized_exp_moment: requires b > -1");
    // E[V^j exp(-bV)] = (-1)^j Gamma^(j)(1 + b) for V ~ Gumbel(0, 1).
    auto gj = [b](unsigned j) { return ((j % 2 == 0) ? 1.0 : -1.0) * gamma_deriv(j, 1.0 + b); };
    const double d = p.delta;
    const double g0 = gj(a);
    const double g1 = gj(a + 1);
    const double g2 = gj(a + 2);
    const double num = 2.0 * g0 - 2.0 * d * (p.mu * g0 + p.sigma * g1) +
                       d * d * (p.mu * p.mu * g0 + 2.0 * p.mu * p.sigma * g1 + p.sigma * p.sigma * g2);
    return num / normalizer(p);
}

double bg_quantile(const BgParams& p, double u, const QuadratureSpec& spec) {
    if (!(u > 0.0 && u < 1.0)) throw DomainError("bg_quantile: u must be in (0, 1)");
    double step = p.sigma;
    double lo = p.mu - step;
    double hi = p.mu + step;
    while (bg_cdf(p, lo, spec) > u) {
        step *= 2.0;
        lo = p.mu - step;
    }
    step = p.sigma;
    while (bg_cdf(p, hi, spec) < u) {
        step *= 2.0;
        hi = p.mu + step;
    }
    while (hi - lo > 1e-10 * std::max(1.0, std::abs(lo))) {
        const double mid = 0.5 * (lo + hi);
        (bg_cdf(p, mid, spec) < u ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace detail

double bg_mgf(const BgParams& p, double t) {
    if (p.delta == 0.0) {
        if (!(t < 1.0 / p.sigma)) throw DomainError("bg_mgf: requires t < 1/sigma when delta = 0");
        return std::exp(p.mu * t) * std::tgamma(1.0 - p.sigma * t);
    }
    if (!(t < 0.0)) throw DomainError("bg_mgf: requires t < 0");
    const double d = p.delta;
    const double m = p.mu;
    const double s = p.sigma;
    const double arg = 1.0 - s * t;
    const double gam = std::tgamma(arg);
    const double bracket = 2.0 - 2.0 * m * d + m * m * d * d + 2.0 * s * d * (1.0 - m * d) * digamma(arg) +
                           s * s * d * d * gamma_deriv(2, arg) / gam;
    return std::exp(m * t) * gam * bracket / normalizer(p);
}

double bg_exp_moment(const BgParams& p, unsigned m, double t) {
    if (m > 2) throw UnsupportedOrderError("bg_exp_moment: m must be 0..2");
    const double bound = std::min(0.0, -static_cast<double>(m) / p.sigma);
    if (!(t < bound)) throw DomainError("bg_exp_moment: requires t < min(0, -m/sigma)");
    return detail::exp_moment_closed_form(p, m, t);
}

}  // namespace bgumbel
