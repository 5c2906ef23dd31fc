#include "bgumbel/special_functions.hpp"

#include <boost/math/special_functions/digamma.hpp>
#include <boost/math/special_functions/polygamma.hpp>
#include <boost/math/special_functions/trigamma.hpp>

#include <algorithm>
#include <cmath>
#include <limits>

#include "bgumbel/errors.hpp"

namespace bgumbel {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// Power series: E1(x) = -gamma - ln x - sum_{k>=1} (-x)^k / (k k!).
double e1_series_tail(double x) {
    double term = 1.0;
    double sum = 0.0;
    for (int k = 1; k < 200; ++k) {
        term *= -x / k;
        const double contrib = term / k;
        sum += contrib;
        if (std::abs(contrib) < kEps * std::abs(sum)) break;
    }
    return sum;
}

// Continued fraction for E1(x), x >= 1 (modified Lentz).
double e1_continued_fraction(double x) {
    constexpr double tiny = 1e-300;
    double b = x + 1.0;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i < 1000; ++i) {
        const double an = -static_cast<double>(i) * i;
        b += 2.0;
        d = 1.0 / (an * d + b);
        c = b + an / c;
        const double del = c * d;
        h *= del;
        if (std::abs(del - 1.0) < kEps) break;
    }
    return h * std::exp(-x);
}

// I(1; a, inf) = -exp(-a) ln a - E1(a), with the a -> 0 limit gamma.
double log_moment_1_tail(double a) {
    if (a == 0.0) return constants::euler_gamma;
    if (a < 1.0) {
        // Cancel the ln a terms analytically: gamma + S(a) - ln(a) * expm1(-a).
        return constants::euler_gamma + e1_series_tail(a) - std::log(a) * std::expm1(-a);
    }
    return -std::exp(-a) * std::log(a) - e1_continued_fraction(a);
}

// I(1; a, inf) - gamma; for a < 1 the gamma terms cancel analytically.
double log_moment_1_tail_minus_gamma(double a) {
    if (a == 0.0) return 0.0;
    if (a < 1.0) return e1_series_tail(a) - std::log(a) * std::expm1(-a);
    return log_moment_1_tail(a) - constants::euler_gamma;
}

double signed_log_power(unsigned k, double v) {
    const double l = -std::log(v);
    return std::pow(l, static_cast<int>(k));
}

}  // namespace

double exp_integral_e1(double x) {
    if (std::isnan(x) || x < 0.0) throw DomainError("exp_integral_e1: x must be >= 0");
    if (x == 0.0) throw DivergenceError("exp_integral_e1: E1(0) diverges");
    if (x < 1.0) return -constants::euler_gamma - std::log(x) - e1_series_tail(x);
    return e1_continued_fraction(x);
}

double upper_incomplete_gamma(double a, double x) {
    if (std::isnan(x) || x < 0.0) throw DomainError("upper_incomplete_gamma: x must be >= 0");
    if (!(a >= 0.0) || a != std::floor(a)) {
        throw DomainError("upper_incomplete_gamma: only non-negative integer a is supported");
    }
    if (a == 0.0) {
        if (x == 0.0) throw DivergenceError("upper_incomplete_gamma: Gamma(0, 0) diverges");
        return exp_integral_e1(x);
    }
    // Gamma(n, x) = (n-1)! e^{-x} sum_{j<n} x^j / j!
    const int n = static_cast<int>(a);
    double term = 1.0;
    double sum = 1.0;
    for (int j = 1; j < n; ++j) {
        term *= x / j;
        sum += term;
    }
    return std::tgamma(a) * std::exp(-x) * sum;
}

double incomplete_log_moment(unsigned k, double a, double b, const QuadratureSpec& spec) {
    spec.validate();
    if (std::isnan(a) || std::isnan(b) || a < 0.0 || !(a < b)) {
        throw DomainError("incomplete_log_moment: requires 0 <= a < b <= inf");
    }
    const bool to_inf = std::isinf(b);

    if (k == 0) return to_inf ? std::exp(-a) : std::exp(-a) - std::exp(-b);
    if (k == 1) {
        if (to_inf) return log_moment_1_tail(a);
        return log_moment_1_tail_minus_gamma(a) - log_moment_1_tail_minus_gamma(b);
    }

    double total = 0.0;

    // (a, min(b, 1)]: v = exp(-s) turns the integrand into s^k exp(-s - e^{-s}).
    if (a < 1.0) {
        const double upper = std::min(b, 1.0);
        const double s_lo = -std::log(upper);
        const double s_hi = a == 0.0 ? kInfinity : -std::log(a);
        const auto head = [k](double s) {
            const double e = std::exp(-s);
            if (e == 0.0) return 0.0;
            return std::pow(s, static_cast<int>(k)) * std::exp(-s - e);
        };
        if (s_lo < s_hi) total += integrate(head, s_lo, s_hi, spec).value;
    }
    if (b <= 1.0) return total;

    // [max(a, 1), b], split at max(a, k) so the tail starts past the integrand's peak.
    const double start = std::max(a, 1.0);
    const double split = std::max(start, static_cast<double>(k));
    const auto body = [k](double v) { return signed_log_power(k, v) * std::exp(-v); };
    if (split > start) total += integrate(body, start, std::min(split, b), spec).value;
    if (b > split) {
        if (to_inf) {
            // Factor out exp(-split) so far-left CDF arguments do not underflow inside the rule.
            const auto tail = [k, split](double s) { return signed_log_power(k, split + s) * std::exp(-s); };
            total += std::exp(-split) * integrate(tail, 0.0, kInfinity, spec).value;
        } else {
            total += integrate(body, split, b, spec).value;
        }
    }
    return total;
}

double log_moment_constant(unsigned k) {
    using namespace constants;
    const double g = euler_gamma;
    const double p2 = pi * pi;
    switch (k) {
        case 0: return 1.0;
        case 1: return g;
        case 2: return g * g + p2 / 6.0;
        case 3: return 2.0 * zeta3 + g * g * g + g * p2 / 2.0;
        case 4: return 8.0 * g * zeta3 + std::pow(g, 4) + g * g * p2 + 3.0 * p2 * p2 / 20.0;
        case 5:
            return 20.0 * g * g * zeta3 + 10.0 * p2 * zeta3 / 3.0 + 24.0 * zeta5 + std::pow(g, 5) +
                   5.0 * std::pow(g, 3) * p2 / 3.0 + 3.0 * g * p2 * p2 / 4.0;
        case 6:
            return 20.0 * g * (2.0 * g * g + p2) * zeta3 + 40.0 * zeta3 * zeta3 + 144.0 * g * zeta5 +
                   std::pow(g, 6) + 5.0 * std::pow(g, 4) * p2 / 2.0 + 9.0 * g * g * p2 * p2 / 4.0 +
                   61.0 * p2 * p2 * p2 / 168.0;
        default: throw UnsupportedOrderError("log_moment_constant: order must be 0..6");
    }
}

double digamma(double x) {
    if (!(x > 0.0)) throw DomainError("digamma: x must be > 0");
    return boost::math::digamma(x);
}

double trigamma(double x) {
    if (!(x > 0.0)) throw DomainError("trigamma: x must be > 0");
    return boost::math::trigamma(x);
}

double polygamma(unsigned n, double x) {
    if (!(x > 0.0)) throw DomainError("polygamma: x must be > 0");
    if (n == 0) return boost::math::digamma(x);
    return boost::math::polygamma(static_cast<int>(n), x);
}

double gamma_deriv(unsigned i, double x) {
    if (!(x > 0.0)) throw DomainError("gamma_deriv: x must be > 0");
    if (i > 4) throw UnsupportedOrderError("gamma_deriv: order must be 0..4");
    const double g = std::tgamma(x);
    if (i == 0) return g;
    const double p0 = boost::math::digamma(x);
    if (i == 1) return g * p0;
    const double p1 = boost::math::trigamma(x);
    if (i == 2) return g * (p0 * p0 + p1);
    const double p2 = boost::math::polygamma(2, x);
    if (i == 3) return g * (p0 * p0 * p0 + 3.0 * p0 * p1 + p2);
    const double p3 = boost::math::polygamma(3, x);
    return g * (std::pow(p0, 4) + 6.0 * p0 * p0 * p1 + 4.0 * p0 * p2 + 3.0 * p1 * p1 + p3);
}

}  // namespace bgumbel
