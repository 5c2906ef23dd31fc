#include "bgumbel/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>

#include "bgumbel/errors.hpp"
#include "bgumbel/special_functions.hpp"

namespace bgumbel {

void McmcConfig::validate() const {
    if (n_iterations == 0 || burn_in >= n_iterations) {
        throw DomainError("McmcConfig: requires n_iterations > burn_in >= 0");
    }
    if (!(proposal_scale > 0.0) || !std::isfinite(proposal_scale)) {
        throw DomainError("McmcConfig: proposal_scale must be positive and finite");
    }
    if (thin == 0) throw DomainError("McmcConfig: thin must be >= 1");
    if (!std::isfinite(initial_point)) throw DomainError("McmcConfig: initial_point must be finite");
}

McmcConfig McmcConfig::defaults_for(const BgParams& p, std::size_t n_iterations, std::uint64_t seed) {
    McmcConfig cfg;
    cfg.n_iterations = n_iterations;
    cfg.burn_in = n_iterations / 10;
    cfg.seed = seed;
    cfg.initial_point = p.mu;
    const double var = bg_moment_set(p).variance;
    cfg.proposal_scale = (std::isfinite(var) && var > 0.0) ? 2.4 * std::sqrt(var) : p.sigma;
    return cfg;
}

MomentBias ChainSummary::bias_vs(const BgParams& p) const {
    const MomentSet m = bg_moment_set(p);
    return {mean - m.mean, variance - m.variance};
}

ChainSummary chain_summary(std::span<const double> draws) {
    if (draws.empty()) throw DataError("chain_summary: empty chain");
    ChainSummary s;
    // Welford update keeps the variance exact for constant chains.
    double mean = 0.0;
    double m2 = 0.0;
    std::size_t n = 0;
    for (double x : draws) {
        ++n;
        const double d = x - mean;
        mean += d / static_cast<double>(n);
        m2 += d * (x - mean);
    }
    s.mean = mean;
    s.variance = n > 1 ? m2 / static_cast<double>(n - 1) : 0.0;
    return s;
}

Chain mh_sample(const BgParams& p, const McmcConfig& cfg) {
    cfg.validate();
    std::mt19937_64 rng(cfg.seed);
    std::normal_distribution<double> step(0.0, cfg.proposal_scale);
    std::uniform_real_distribution<double> unif(0.0, 1.0);

    Chain chain;
    chain.seed = cfg.seed;
    chain.draws.reserve((cfg.n_iterations - cfg.burn_in) / cfg.thin + 1);

    double x = cfg.initial_point;
    double lp = bg_log_pdf(p, x);
    std::size_t accepted = 0;
    for (std::size_t i = 0; i < cfg.n_iterations; ++i) {
        const double y = x + step(rng);
        const double lq = bg_log_pdf(p, y);
        const double u = unif(rng);
        if (std::isfinite(lq) && std::log(u) < lq - lp) {
            x = y;
            lp = lq;
            ++accepted;
        }
        if (i >= cfg.burn_in && (i - cfg.burn_in) % cfg.thin == 0) chain.draws.push_back(x);
    }
    chain.acceptance_rate = static_cast<double>(accepted) / static_cast<double>(cfg.n_iterations);
    return chain;
}

namespace {

// A one-dimensional law given by its CDF and density, inverted with a
// tabulated starting point and safeguarded Newton steps.
class CdfInverter {
public:
    CdfInverter(std::function<double(double)> cdf, std::function<double(double)> pdf, double lo, double hi,
                int table_size = 2049)
        : cdf_(std::move(cdf)), pdf_(std::move(pdf)) {
        xs_.resize(table_size);
        fs_.resize(table_size);
        for (int i = 0; i < table_size; ++i) {
            xs_[i] = lo + (hi - lo) * i / (table_size - 1);
            fs_[i] = cdf_(xs_[i]);
        }
        // Enforce monotone table values so the bracket search is well defined.
        for (int i = 1; i < table_size; ++i) fs_[i] = std::max(fs_[i], fs_[i - 1]);
    }

    double operator()(double u) const {
        double lo;
        double hi;
        if (u <= fs_.front()) {
            hi = xs_.front();
            double step = xs_[1] - xs_[0];
            lo = hi - step;
            while (cdf_(lo) > u) {
                step *= 2.0;
                lo = hi - step;
            }
        } else if (u >= fs_.back()) {
            lo = xs_.back();
            double step = xs_[1] - xs_[0];
            hi = lo + step;
            while (cdf_(hi) < u) {
                step *= 2.0;
                hi = lo + step;
            }
        } else {
            const auto it = std::upper_bound(fs_.begin(), fs_.end(), u);
            const auto i = static_cast<std::size_t>(it - fs_.begin());
            lo = xs_[i - 1];
            hi = xs_[i];
        }
        double x = 0.5 * (lo + hi);
        for (int it = 0; it < 100; ++it) {
            const double f = cdf_(x) - u;
            if (f < 0.0) lo = x; else hi = x;
            const double dens = pdf_(x);
            double next = (dens > 0.0) ? x - f / dens : 0.5 * (lo + hi);
            if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
            const double tol = 1e-10 * std::max(1.0, std::abs(x));
            if (std::abs(next - x) < tol || hi - lo < tol) return next;
            x = next;
        }
        return x;
    }

private:
    std::function<double(double)> cdf_;
    std::function<double(double)> pdf_;
    std::vector<double> xs_;
    std::vector<double> fs_;
};

// E(Y 1{Y <= x}) for Y ~ Gumbel(mu, sigma), via closed-form I(0) and I(1).
double truncated_first_moment(const GumbelParams& g, double x) {
    const double z = (x - g.mu) / g.sigma;
    if (-z > std::log(700.0)) return 0.0;
    const double a = std::exp(-z);
    return g.mu * incomplete_log_moment(0, a, kInfinity) + g.sigma * incomplete_log_moment(1, a, kInfinity);
}

// Support bounds where a Gumbel-weighted CDF is within 1e-13 of 0 or 1.
std::pair<double, double> table_range(const std::function<double(double)>& cdf, double mu, double sigma) {
    double lo = mu - sigma;
    while (cdf(lo) > 1e-13) lo -= sigma;
    double hi = mu + sigma;
    while (cdf(hi) < 1.0 - 1e-13) hi += 2.0 * sigma;
    return {lo, hi};
}

}  // namespace

std::vector<double> representation_sample(const BgParams& p, std::size_t n, std::uint64_t seed) {
    const MixtureWeights w = mixture_weights(p);
    if (!w.in_regime) {
        throw RegimeError(
            "representation_sample: requires delta > 0 and mu + sigma*gamma < 0, or delta < 0 and mu + sigma*gamma > 0");
    }
    const GumbelParams g = p.gumbel();
    const double mean_y = g.mu + g.sigma * constants::euler_gamma;
    const bool good_is_negative = mean_y < 0.0;
    const double at_zero = truncated_first_moment(g, 0.0);  // E(Y 1{Y <= 0})
    // Mass of the Y_1 weight |y| f(y) on the side where it has the sign of E(Y).
    const double good_mass = good_is_negative ? -at_zero : mean_y - at_zero;
    const double plus = good_mass / std::abs(mean_y);  // >= 1
    const double minus = plus - 1.0;

    auto gumbel_density = [g](double x) { return gumbel_pdf(g, x); };

    // Component 2: y f(y) restricted to the good side, normalized.
    auto c2_cdf = [&, good_is_negative](double x) {
        if (good_is_negative) return x >= 0.0 ? 1.0 : -truncated_first_moment(g, x) / good_mass;
        return x <= 0.0 ? 0.0 : (truncated_first_moment(g, x) - at_zero) / good_mass;
    };
    auto c2_pdf = [&, good_is_negative](double x) {
        const bool good = good_is_negative ? x < 0.0 : x > 0.0;
        return good ? std::abs(x) * gumbel_density(x) / good_mass : 0.0;
    };
    const double second = gumbel_raw_moment(g, 2);
    auto c3_cdf = [g](double x) { return weighted_gumbel_cdf(g, 2, x); };
    auto c3_pdf = [&, second](double x) { return x * x * gumbel_density(x) / second; };

    auto [c2_lo, c2_hi] = table_range(c2_cdf, g.mu, g.sigma);
    if (good_is_negative) c2_hi = std::min(c2_hi, 0.0);
    else c2_lo = std::max(c2_lo, 0.0);
    const auto [c3_lo, c3_hi] = table_range(c3_cdf, g.mu, g.sigma);
    const CdfInverter invert2(c2_cdf, c2_pdf, c2_lo, c2_hi);
    const CdfInverter invert3(c3_cdf, c3_pdf, c3_lo, c3_hi);

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    auto open_unit = [&] {
        double u;
        do u = unif(rng);
        while (u <= 0.0);
        return u;
    };
    std::discrete_distribution<int> pick({w.p[0], w.p[1] * plus, w.p[2]});
    const double surplus_scale = 2.0 * std::abs(p.delta) / normalizer(p);  // p2 / |E(Y)|

    std::vector<double> out;
    out.reserve(n);
    while (out.size() < n) {
        const int component = pick(rng);
        const double u = open_unit();
        double x;
        if (component == 0) {
            x = g.mu - g.sigma * std::log(-std::log(u));
        } else if (component == 1) {
            x = invert2(u);
        } else {
            x = invert3(u);
        }
        const bool bad = good_is_negative ? x > 0.0 : x < 0.0;
        if (bad && minus > 0.0) {
            const double target = bg_pdf(p, x);
            const double extra = surplus_scale * std::abs(x) * gumbel_density(x);
            if (open_unit() * (target + extra) > target) continue;
        }
        out.push_back(x);
    }
    return out;
}

}  // namespace bgumbel
