#pragma once

#include <functional>
#include <limits>

namespace bgumbel {

/// Tolerance contract for adaptive quadrature.
///
/// The integrator stops once the summed error estimate is below
/// max(abs_tol, rel_tol * |I|), or throws QuadratureError after
/// max_subdivisions interval splits.
struct QuadratureSpec {
    double abs_tol = 1e-12;
    double rel_tol = 1e-10;
    int max_subdivisions = 200;

    /// Throws DomainError unless abs_tol > 0, rel_tol > 0 and max_subdivisions >= 1.
    void validate() const;
};

struct QuadratureResult {
    double value = 0.0;
    double error_estimate = 0.0;
    int subdivisions = 0;
};

using Integrand = std::function<double(double)>;

/// Globally adaptive Gauss-Kronrod (7/15) integration of f over [a, b].
///
/// b may be +infinity, in which case the half line is mapped onto (0, 1]
/// with x = a + (1 - t) / t. Throws QuadratureError if the tolerance is not
/// met within spec.max_subdivisions splits.
QuadratureResult integrate(const Integrand& f, double a, double b, const QuadratureSpec& spec = {});

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

}  // namespace bgumbel
