#pragma once

#include <numbers>

#include "bgumbel/quadrature.hpp"

namespace bgumbel {

namespace constants {
inline constexpr double euler_gamma = 0.57721566490153286061;
inline constexpr double pi = std::numbers::pi;
inline constexpr double zeta3 = 1.2020569031595942854;
inline constexpr double zeta5 = 1.0369277551433699263;
}  // namespace constants

/// Upper incomplete gamma Gamma(a, x) for non-negative integer a.
///
/// a = 0 is the exponential integral E1(x) (series below 1, continued
/// fraction above). Throws DomainError for x < 0 or non-integer a, and
/// DivergenceError for a = 0, x = 0.
double upper_incomplete_gamma(double a, double x);

/// Exponential integral E1(x) = Gamma(0, x), x > 0.
double exp_integral_e1(double x);

/// (-1)^k * integral over [a, b] of ln^k(v) exp(-v) dv, for 0 <= a < b <= inf.
///
/// k = 0 and k = 1 use closed forms; k >= 2 uses adaptive quadrature. The
/// part of the range inside (0, 1] is integrated after v = exp(-s), which
/// removes the logarithmic singularity at the origin.
double incomplete_log_moment(unsigned k, double a, double b, const QuadratureSpec& spec = {});

/// I(k; 0, inf) in closed form for k = 0..6 (Euler gamma, pi, zeta(3), zeta(5)).
double log_moment_constant(unsigned k);

double digamma(double x);
double trigamma(double x);

/// psi^(n)(x) for n >= 0.
double polygamma(unsigned n, double x);

/// The i-th derivative of Gamma at x > 0, i = 0..4.
///
/// Gamma^(i) = Gamma * B_i(psi, psi', psi'', psi''') with B_i the complete
/// Bell polynomial.
double gamma_deriv(unsigned i, double x);

}  // namespace bgumbel
