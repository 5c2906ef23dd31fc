#include "bgumbel/model_selection.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <boost/math/special_functions/gamma.hpp>

#include "bgumbel/errors.hpp"
#include "bgumbel/special_functions.hpp"

namespace bgumbel {

std::vector<double> block_maxima(std::span<const double> series, const BlockMaximaConfig& cfg) {
    if (series.empty()) throw DataError("block_maxima: empty series");
    if (cfg.block_length == 0) throw DomainError("block_maxima: block_length must be >= 1");
    std::vector<double> out;
    for (std::size_t start = 0; start < series.size(); start += cfg.block_length) {
        const std::size_t end = std::min(series.size(), start + cfg.block_length);
        if (end - start < cfg.block_length && !cfg.allow_partial_last_block) break;
        out.push_back(*std::max_element(series.begin() + static_cast<std::ptrdiff_t>(start),
                                        series.begin() + static_cast<std::ptrdiff_t>(end)));
    }
    return out;
}

std::size_t default_ljung_box_lags(std::size_t n) { return std::max<std::size_t>(1, std::min<std::size_t>(10, n / 5)); }

TestResult ljung_box(std::span<const double> series, std::size_t lags) {
    const std::size_t n = series.size();
    if (lags == 0 || lags >= n) throw DataError("ljung_box: need 1 <= lags < series length");
    const double mean = std::accumulate(series.begin(), series.end(), 0.0) / static_cast<double>(n);
    double c0 = 0.0;
    for (double x : series) c0 += (x - mean) * (x - mean);
    if (c0 == 0.0) throw DataError("ljung_box: constant series");
    double q = 0.0;
    for (std::size_t k = 1; k <= lags; ++k) {
        double ck = 0.0;
        for (std::size_t t = k; t < n; ++t) ck += (series[t] - mean) * (series[t - k] - mean);
        const double r = ck / c0;
        q += r * r / static_cast<double>(n - k);
    }
    const double nd = static_cast<double>(n);
    q *= nd * (nd + 2.0);
    return {q, boost::math::gamma_q(0.5 * static_cast<double>(lags), 0.5 * q)};
}

double kolmogorov_survival(double t) {
    if (t <= 0.0) return 1.0;
    if (t < 1.18) {
        // Theta-function form converges fast for small t.
        const double w = -std::pow(constants::pi, 2) / (8.0 * t * t);
        double sum = 0.0;
        for (int k = 1; k <= 7; k += 2) sum += std::exp(w * k * k);
        return std::clamp(1.0 - std::sqrt(2.0 * constants::pi) / t * sum, 0.0, 1.0);
    }
    double sum = 0.0;
    for (int k = 1; k <= 100; ++k) {
        const double term = std::exp(-2.0 * k * k * t * t);
        sum += (k % 2 == 1 ? 2.0 : -2.0) * term;
        if (term < 1e-17) break;
    }
    return std::clamp(sum, 0.0, 1.0);
}

TestResult ks_test(std::span<const double> data, const std::function<double(double)>& cdf) {
    if (data.empty()) throw DataError("ks_test: empty data");
    std::vector<double> x(data.begin(), data.end());
    std::sort(x.begin(), x.end());
    const double n = static_cast<double>(x.size());
    double d = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double f = cdf(x[i]);
        d = std::max({d, (static_cast<double>(i) + 1.0) / n - f, f - static_cast<double>(i) / n});
    }
    d = std::clamp(d, 0.0, 1.0);
    return {d, kolmogorov_survival(std::sqrt(n) * d)};
}

double ks_two_sample_statistic(std::span<const double> a, std::span<const double> b) {
    if (a.empty() || b.empty()) throw DataError("ks_two_sample_statistic: empty sample");
    std::vector<double> x(a.begin(), a.end());
    std::vector<double> y(b.begin(), b.end());
    std::sort(x.begin(), x.end());
    std::sort(y.begin(), y.end());
    const double na = static_cast<double>(x.size());
    const double nb = static_cast<double>(y.size());
    std::size_t i = 0;
    std::size_t j = 0;
    double d = 0.0;
    while (i < x.size() && j < y.size()) {
        const double v = std::min(x[i], y[j]);
        while (i < x.size() && x[i] == v) ++i;
        while (j < y.size() && y[j] == v) ++j;
        d = std::max(d, std::abs(static_cast<double>(i) / na - static_cast<double>(j) / nb));
    }
    return d;
}

InformationCriteria information_criteria(double loglik, int k, std::size_t n) {
    if (k < 1 || n < 1) throw DomainError("information_criteria: need k >= 1 and n >= 1");
    return {2.0 * k - 2.0 * loglik, k * std::log(static_cast<double>(n)) - 2.0 * loglik};
}

DescriptiveStats descriptive_stats(std::span<const double> data) {
    if (data.empty()) throw DataError("descriptive_stats: empty data");
    std::vector<double> x(data.begin(), data.end());
    std::sort(x.begin(), x.end());
    const std::size_t n = x.size();
    DescriptiveStats s;
    s.mean = std::accumulate(x.begin(), x.end(), 0.0) / static_cast<double>(n);
    s.median = n % 2 == 1 ? x[n / 2] : 0.5 * (x[n / 2 - 1] + x[n / 2]);
    s.min = x.front();
    s.max = x.back();
    double ss = 0.0;
    for (double v : x) ss += (v - s.mean) * (v - s.mean);
    s.std_dev = n > 1 ? std::sqrt(ss / static_cast<double>(n - 1)) : 0.0;
    return s;
}

GofReport gof_report(const std::string& name, const FitResult& fit, std::span<const double> data, int k) {
    const BgParams p = fit.params;
    std::function<double(double)> cdf;
    if (p.delta == 0.0) {
        const GumbelParams g = p.gumbel();
        cdf = [g](double x) { return gumbel_cdf(g, x); };
    } else {
        cdf = [p](double x) { return bg_cdf(p, x); };
    }
    const TestResult ks = ks_test(data, cdf);
    const InformationCriteria ic = information_criteria(fit.log_likelihood, k, data.size());
    return {name, ks.statistic, ks.p_value, ic.aic, ic.bic, data.size()};
}

Comparison compare_models(std::span<const double> data, const CompareOptions& options) {
    if (data.size() < 5) throw DataError("compare_models: need at least 5 observations");
    Comparison out;
    std::vector<double> x(data.begin(), data.end());
    if (options.center) {
        out.centered = true;
        out.center = std::accumulate(x.begin(), x.end(), 0.0) / static_cast<double>(x.size());
        for (double& v : x) v -= out.center;
    }
    try {
        const FitResult f = fit_mle(x, options.fit);
        out.bg = ModelFit{f, gof_report("BG", f, x, 3)};
    } catch (const Error& e) {
        out.bg_error = e.what();
    }
    try {
        const FitResult f = fit_gumbel_mle(x, options.fit);
        out.gumbel = ModelFit{f, gof_report("Gumbel", f, x, 2)};
    } catch (const Error& e) {
        out.gumbel_error = e.what();
    }
    if (out.bg && out.gumbel) {
        const GofReport& b = out.bg->report;
        const GofReport& g = out.gumbel->report;
        if (b.aic < g.aic) out.preferred = "BG";
        else if (g.aic < b.aic) out.preferred = "Gumbel";
        else if (b.bic < g.bic) out.preferred = "BG";
        else out.preferred = "Gumbel";
    } else if (out.bg) {
        out.preferred = "BG";
    } else if (out.gumbel) {
        out.preferred = "Gumbel";
    }
    return out;
}

}  // namespace bgumbel
