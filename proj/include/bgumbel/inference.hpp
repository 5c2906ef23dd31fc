#pragma once

#include <array>
#include <optional>
#include <span>

#include <Eigen/Dense>

#include "bgumbel/distribution.hpp"

namespace bgumbel {

/// Ordered (mu, sigma, delta).
using ScoreVector = std::array<double, 3>;

/// Partial derivatives of Z with respect to (mu, sigma, delta).
struct NormalizerDerivatives {
    double z = 1.0;
    std::array<double, 3> first{};
    Eigen::Matrix3d second = Eigen::Matrix3d::Zero();
};

NormalizerDerivatives normalizer_derivatives(const BgParams& p);

/// D_{u,v} = d/du (n/Z dZ/dv) = (n/Z)(Z_uv - Z_u Z_v / Z).
Eigen::Matrix3d d_matrix(const BgParams& p, double n);

/// Throws DataError on empty or non-finite data.
double log_likelihood(const BgParams& p, std::span<const double> data);
ScoreVector score(const BgParams& p, std::span<const double> data);
Eigen::Matrix3d hessian(const BgParams& p, std::span<const double> data);

/// Per-observation expected information -E[hessian]/n.
///
/// E[F1..F3] come from closed gamma-derivative expressions and E[F4]
/// from adaptive quadrature (QuadratureError if it does not converge).
Eigen::Matrix3d fisher_information(const BgParams& p, const QuadratureSpec& spec = {});

struct FitOptions {
    std::optional<BgParams> init;
    int max_iter = 500;
    double tol = 1e-6;  ///< on the score norm, relative to max(1, |l|)
};

struct FitResult {
    BgParams params;
    /// From the observed information; absent when it is not positive definite.
    /// The Gumbel fit reports 0 for delta, which is held fixed.
    std::optional<std::array<double, 3>> std_errors;
    /// From n times the expected information at the estimate.
    std::optional<std::array<double, 3>> expected_std_errors;
    double log_likelihood = 0.0;
    std::size_t n_obs = 0;
    bool converged = false;
    int iterations = 0;
    double grad_norm_at_solution = 0.0;
};

/// Maximum likelihood for (mu, sigma, delta).
///
/// Quasi-Newton (BFGS) on (mu, ln sigma, delta) with a backtracking line
/// search, finished with Newton steps on the analytic Hessian. Starts from
/// the Gumbel method of moments with delta in {-1, -0.1, 0, 0.1, 1} / scale,
/// scale being the normalized MAD, plus options.init if given. Throws
/// DataError when n < 4 or all observations are equal.
FitResult fit_mle(std::span<const double> data, const FitOptions& options = {});

/// Two-parameter Gumbel fit (delta = 0).
FitResult fit_gumbel_mle(std::span<const double> data, const FitOptions& options = {});

}  // namespace bgumbel
