#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bgumbel/inference.hpp"

namespace bgumbel {

struct BlockMaximaConfig {
    std::size_t block_length = 60;
    /// Keep a trailing block shorter than block_length.
    bool allow_partial_last_block = true;
};

/// Maxima of consecutive non-overlapping blocks, in series order.
///
/// Yields ceil(T/N) values with a partial last block, floor(T/N) otherwise.
std::vector<double> block_maxima(std::span<const double> series, const BlockMaximaConfig& cfg);

struct TestResult {
    double statistic = 0.0;
    double p_value = 1.0;
};

/// Q = n(n+2) sum_k r_k^2 / (n-k), referred to chi-square(lags).
TestResult ljung_box(std::span<const double> series, std::size_t lags);

/// min(10, n/5), at least 1.
std::size_t default_ljung_box_lags(std::size_t n);

/// One-sample KS test against cdf with the asymptotic Kolmogorov p-value.
TestResult ks_test(std::span<const double> data, const std::function<double(double)>& cdf);

/// Two-sample KS statistic sup|F_a - F_b|.
double ks_two_sample_statistic(std::span<const double> a, std::span<const double> b);

/// Asymptotic Kolmogorov survival P(K > t).
double kolmogorov_survival(double t);

struct InformationCriteria {
    double aic = 0.0;
    double bic = 0.0;
};

InformationCriteria information_criteria(double loglik, int k, std::size_t n);

struct DescriptiveStats {
    double mean = 0.0;
    double median = 0.0;
    double max = 0.0;
    double min = 0.0;
    double std_dev = 0.0;  ///< n - 1 denominator
};

DescriptiveStats descriptive_stats(std::span<const double> data);

struct GofReport {
    std::string model_name;
    double ks_statistic = 0.0;
    double ks_p_value = 1.0;
    double aic = 0.0;
    double bic = 0.0;
    std::size_t n_obs = 0;
};

/// KS against the fitted CDF plus AIC/BIC with k parameters.
GofReport gof_report(const std::string& name, const FitResult& fit, std::span<const double> data, int k);

struct ModelFit {
    FitResult fit;
    GofReport report;
};

struct Comparison {
    std::optional<ModelFit> bg;
    std::optional<ModelFit> gumbel;
    std::string bg_error;      ///< set when the BG fit failed
    std::string gumbel_error;  ///< set when the Gumbel fit failed
    std::string preferred;     ///< "BG", "Gumbel" or empty if both failed
    bool centered = false;
    double center = 0.0;
};

struct CompareOptions {
    /// Subtract the sample mean before fitting.
    bool center = true;
    FitOptions fit;
};

/// Fits both models and prefers the lower AIC, then the lower BIC, then
/// fewer parameters. A failing fit is recorded without aborting the other.
Comparison compare_models(std::span<const double> data, const CompareOptions& options = {});

}  // namespace bgumbel
