#include "bgumbel/inference.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>
#include <vector>

#include "bgumbel/errors.hpp"
#include "bgumbel/special_functions.hpp"

namespace bgumbel {

namespace {

using constants::euler_gamma;
using constants::pi;

void check_data(std::span<const double> data) {
    if (data.empty()) throw DataError("log-likelihood: empty data");
    for (double x : data) {
        if (!std::isfinite(x)) throw DataError("log-likelihood: non-finite observation");
    }
}

struct Problem {
    int dim;
    std::function<bool(const Eigen::VectorXd&, double&, Eigen::VectorXd&)> eval;  // f = -l, g = grad f
};

struct Minimum {
    Eigen::VectorXd theta;
    double f = 0.0;
    int iterations = 0;
};

// BFGS with Armijo backtracking on a function that may reject points.
Minimum bfgs(const Problem& prob, Eigen::VectorXd theta, int max_iter, double tol) {
    const int d = prob.dim;
    double f;
    Eigen::VectorXd g(d);
    if (!prob.eval(theta, f, g)) throw DomainError("fit: invalid starting point");
    Eigen::MatrixXd hinv = Eigen::MatrixXd::Identity(d, d);
    bool scaled = false;
    int it = 0;
    for (; it < max_iter; ++it) {
        if (g.norm() < tol * std::max(1.0, std::abs(f))) break;
        Eigen::VectorXd dir = -hinv * g;
        if (g.dot(dir) >= 0.0) {
            hinv.setIdentity();
            dir = -g;
        }
        double alpha = 1.0;
        const double max_step = dir.cwiseAbs().maxCoeff();
        if (!scaled && max_step > 1.0) alpha = 1.0 / max_step;
        double f_new = f;
        Eigen::VectorXd g_new(d);
        Eigen::VectorXd trial(d);
        bool ok = false;
        for (int ls = 0; ls < 60; ++ls) {
            trial = theta + alpha * dir;
            if (prob.eval(trial, f_new, g_new) && std::isfinite(f_new) && f_new <= f + 1e-4 * alpha * g.dot(dir)) {
                ok = true;
                break;
            }
            alpha *= 0.5;
        }
        if (!ok) break;
        const Eigen::VectorXd s = trial - theta;
        const Eigen::VectorXd y = g_new - g;
        const double sy = s.dot(y);
        if (sy > 1e-12 * s.norm() * y.norm()) {
            if (!scaled) {
                hinv *= sy / y.squaredNorm();
                scaled = true;
            }
            const double rho = 1.0 / sy;
            const Eigen::MatrixXd eye = Eigen::MatrixXd::Identity(d, d);
            hinv = (eye - rho * s * y.transpose()) * hinv * (eye - rho * y * s.transpose()) + rho * s * s.transpose();
        }
        const double df = f - f_new;
        theta = trial;
        f = f_new;
        g = g_new;
        if (df >= 0.0 && df < 1e-15 * std::max(1.0, std::abs(f)) && g.norm() < 1e-3 * std::max(1.0, std::abs(f))) {
            ++it;
            break;
        }
    }
    return {theta, f, it};
}

struct Candidate {
    Eigen::VectorXd x;  // natural parameters
    double loglik;
    int iterations;
};

// Newton refinement on the natural parameters, keeping only ascent steps.
template <class LogLik, class Grad, class Hess>
int newton_polish(Eigen::VectorXd& x, double& ll, LogLik&& loglik, Grad&& grad, Hess&& hess, double tol) {
    int it = 0;
    for (; it < 50; ++it) {
        const Eigen::VectorXd s = grad(x);
        if (s.norm() < 1e-3 * tol * std::max(1.0, std::abs(ll))) break;
        const Eigen::MatrixXd h = hess(x);
        Eigen::LLT<Eigen::MatrixXd> llt(-h);
        if (llt.info() != Eigen::Success) break;
        const Eigen::VectorXd step = llt.solve(s);
        double alpha = 1.0;
        bool moved = false;
        for (int k = 0; k < 30; ++k) {
            const Eigen::VectorXd trial = x + alpha * step;
            if (trial(1) > 0.0) {
                const double lt = loglik(trial);
                if (std::isfinite(lt) && lt >= ll - 1e-12 * std::abs(ll)) {
                    x = trial;
                    ll = lt;
                    moved = true;
                    break;
                }
            }
            alpha *= 0.5;
        }
        if (!moved) break;
    }
    return it;
}

struct Moments2 {
    double mean;
    double sd;
    double mad;
};

Moments2 summarize(std::span<const double> data) {
    const double n = static_cast<double>(data.size());
    const double mean = std::accumulate(data.begin(), data.end(), 0.0) / n;
    double ss = 0.0;
    for (double x : data) ss += (x - mean) * (x - mean);
    const double sd = std::sqrt(ss / (n - 1.0));
    std::vector<double> v(data.begin(), data.end());
    auto median_of = [](std::vector<double>& w) {
        const std::size_t m = w.size() / 2;
        std::nth_element(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(m), w.end());
        double med = w[m];
        if (w.size() % 2 == 0) med = 0.5 * (med + *std::max_element(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(m)));
        return med;
    };
    const double med = median_of(v);
    for (double& x : v) x = std::abs(x - med);
    const double mad = 1.4826 * median_of(v);
    return {mean, sd, mad};
}

void check_fit_data(std::span<const double> data) {
    check_data(data);
    if (data.size() < 4) throw DataError("fit: need at least 4 observations");
    const auto [lo, hi] = std::minmax_element(data.begin(), data.end());
    if (*lo == *hi) throw DataError("fit: all observations are equal");
}

std::optional<std::array<double, 3>> std_errors_from(const Eigen::MatrixXd& info) {
    Eigen::LLT<Eigen::MatrixXd> llt(info);
    if (llt.info() != Eigen::Success) return std::nullopt;
    const Eigen::MatrixXd cov = llt.solve(Eigen::MatrixXd::Identity(info.rows(), info.cols()));
    std::array<double, 3> se{0.0, 0.0, 0.0};
    for (Eigen::Index i = 0; i < info.rows(); ++i) {
        if (!(cov(i, i) > 0.0) || !std::isfinite(cov(i, i))) return std::nullopt;
        se[static_cast<std::size_t>(i)] = std::sqrt(cov(i, i));
    }
    return se;
}

double norm3(const ScoreVector& s) { return std::sqrt(s[0] * s[0] + s[1] * s[1] + s[2] * s[2]); }

}  // namespace

NormalizerDerivatives normalizer_derivatives(const BgParams& p) {
    const double s = p.sigma;
    const double d = p.delta;
    const double mbar = p.mu + s * euler_gamma;
    const double c = d * mbar - 1.0;
    const double pi2 = pi * pi;
    NormalizerDerivatives out;
    out.z = 1.0 + d * d * s * s * pi2 / 6.0 + c * c;
    out.first = {2.0 * d * c, d * d * s * pi2 / 3.0 + 2.0 * d * euler_gamma * c, d * s * s * pi2 / 3.0 + 2.0 * mbar * c};
    Eigen::Matrix3d& h = out.second;
    h(0, 0) = 2.0 * d * d;
    h(0, 1) = h(1, 0) = 2.0 * d * d * euler_gamma;
    h(0, 2) = h(2, 0) = 4.0 * d * mbar - 2.0;
    h(1, 1) = d * d * pi2 / 3.0 + 2.0 * d * d * euler_gamma * euler_gamma;
    h(1, 2) = h(2, 1) = 2.0 * d * s * pi2 / 3.0 + 4.0 * d * euler_gamma * mbar - 2.0 * euler_gamma;
    h(2, 2) = s * s * pi2 / 3.0 + 2.0 * mbar * mbar;
    return out;
}

Eigen::Matrix3d d_matrix(const BgParams& p, double n) {
    const NormalizerDerivatives zd = normalizer_derivatives(p);
    Eigen::Matrix3d out;
    for (int u = 0; u < 3; ++u) {
        for (int v = 0; v < 3; ++v) {
            out(u, v) = n / zd.z * (zd.second(u, v) - zd.first[u] * zd.first[v] / zd.z);
        }
    }
    return out;
}

double log_likelihood(const BgParams& p, std::span<const double> data) {
    check_data(data);
    const double n = static_cast<double>(data.size());
    double sum = 0.0;
    for (double x : data) {
        const double u = 1.0 - p.delta * x;
        const double z = (x - p.mu) / p.sigma;
        sum += std::log(u * u + 1.0) - z - std::exp(-z);
    }
    return -n * std::log(normalizer(p)) - n * std::log(p.sigma) + sum;
}

ScoreVector score(const BgParams& p, std::span<const double> data) {
    check_data(data);
    const double n = static_cast<double>(data.size());
    const double s = p.sigma;
    const NormalizerDerivatives zd = normalizer_derivatives(p);
    double sum_e = 0.0;
    double sum_z = 0.0;
    double sum_d = 0.0;
    for (double x : data) {
        const double z = (x - p.mu) / s;
        const double e = std::exp(-z);
        const double u = 1.0 - p.delta * x;
        sum_e += e;
        sum_z += z * (1.0 - e);
        sum_d += x * u / (u * u + 1.0);
    }
    return {-n * zd.first[0] / zd.z + n / s - sum_e / s, -n * zd.first[1] / zd.z - n / s + sum_z / s,
            -n * zd.first[2] / zd.z - 2.0 * sum_d};
}

Eigen::Matrix3d hessian(const BgParams& p, std::span<const double> data) {
    check_data(data);
    const double n = static_cast<double>(data.size());
    const double s = p.sigma;
    const double s2 = s * s;
    double a_mm = 0.0;
    double a_ms = 0.0;
    double a_ss = 0.0;
    double a_dd = 0.0;
    for (double x : data) {
        const double z = (x - p.mu) / s;
        const double e = std::exp(-z);
        const double u = 1.0 - p.delta * x;
        const double q = u * u + 1.0;
        a_mm += e;
        a_ms += (1.0 - z) * e;
        a_ss += z * (2.0 - 2.0 * e + z * e);
        a_dd += x * x * (u * u - 1.0) / (q * q);
    }
    Eigen::Matrix3d h = -d_matrix(p, n);
    h(0, 0) -= a_mm / s2;
    const double ms = -n / s2 + a_ms / s2;
    h(0, 1) += ms;
    h(1, 0) += ms;
    h(1, 1) += n / s2 - a_ss / s2;
    h(2, 2) -= 2.0 * a_dd;
    return h;
}

Eigen::Matrix3d fisher_information(const BgParams& p, const QuadratureSpec& spec) {
    const double s = p.sigma;
    const double s2 = s * s;
    const double e_f1 = detail::standardized_exp_moment(p, 0, 1.0);  // E[e^{-z}]
    const double e_ze = detail::standardized_exp_moment(p, 1, 1.0);  // E[z e^{-z}]
    const double e_z2e = detail::standardized_exp_moment(p, 2, 1.0);  // E[z^2 e^{-z}]
    const double e_z = (bg_moment_set(p).mean - p.mu) / s;
    const double e_f2 = e_f1 - e_ze;                       // E[(1 - z) e^{-z}]
    const double e_f3 = 2.0 * e_z - 2.0 * e_ze + e_z2e;    // E[z (2 - 2e^{-z} + z e^{-z})]

    auto f4 = [&p](double x) {
        const double u = 1.0 - p.delta * x;
        const double q = u * u + 1.0;
        const double f = bg_pdf(p, x);
        return f == 0.0 ? 0.0 : x * x * (u * u - 1.0) / (q * q) * f;
    };
    const double right = integrate([&](double t) { return f4(p.mu + t); }, 0.0, kInfinity, spec).value;
    const double left = integrate([&](double t) { return f4(p.mu - t); }, 0.0, kInfinity, spec).value;
    const double e_f4 = right + left;

    Eigen::Matrix3d info = d_matrix(p, 1.0);
    info(0, 0) += e_f1 / s2;
    info(0, 1) += 1.0 / s2 - e_f2 / s2;
    info(1, 0) = info(0, 1);
    info(1, 1) += -1.0 / s2 + e_f3 / s2;
    info(2, 2) += 2.0 * e_f4;
    return info;
}

FitResult fit_mle(std::span<const double> data, const FitOptions& options) {
    check_fit_data(data);
    const Moments2 m = summarize(data);
    const double sigma0 = m.sd * std::sqrt(6.0) / pi;
    const double mu0 = m.mean - euler_gamma * sigma0;
    const double scale = m.mad > 0.0 ? m.mad : m.sd;

    std::vector<Eigen::Vector3d> starts;
    for (double k : {-1.0, -0.1, 0.0, 0.1, 1.0}) starts.emplace_back(mu0, std::log(sigma0), k / scale);

    // Screened grid: 1/delta at a data quantile places the weight's zero inside the sample.
    std::vector<double> sorted(data.begin(), data.end());
    std::sort(sorted.begin(), sorted.end());
    auto quantile = [&sorted](double q) {
        return sorted[static_cast<std::size_t>(q * static_cast<double>(sorted.size() - 1))];
    };
    std::vector<double> deltas;
    for (double q : {0.01, 0.05, 0.15, 0.3, 0.5, 0.7, 0.85, 0.95, 0.99}) {
        const double x = quantile(q);
        if (std::abs(x) * 10.0 > scale) deltas.push_back(1.0 / x);
    }
    for (double c : {0.3, 1.0, 3.0, 10.0}) {
        deltas.push_back(c / scale);
        deltas.push_back(-c / scale);
    }
    for (double d : deltas) {
        double best_ll = -std::numeric_limits<double>::infinity();
        Eigen::Vector3d best_th;
        for (double mq : {0.05, 0.1, 0.25, 0.5, 0.75}) {
            for (double sf : {0.25, 0.5, 0.7, 1.0}) {
                const double ll = log_likelihood(BgParams(quantile(mq), sf * sigma0, d), data);
                if (ll > best_ll) {
                    best_ll = ll;
                    best_th = Eigen::Vector3d(quantile(mq), std::log(sf * sigma0), d);
                }
            }
        }
        if (std::isfinite(best_ll)) starts.push_back(best_th);
    }
    if (options.init) starts.emplace_back(options.init->mu, std::log(options.init->sigma), options.init->delta);
    try {
        const FitResult g = fit_gumbel_mle(data, {std::nullopt, options.max_iter, options.tol});
        starts.emplace_back(g.params.mu, std::log(g.params.sigma), 0.0);
    } catch (const Error&) {
    }

    Problem prob{3, [&](const Eigen::VectorXd& th, double& f, Eigen::VectorXd& g) {
                     const double sigma = std::exp(th(1));
                     if (!std::isfinite(sigma) || !(sigma > 0.0) || !std::isfinite(th(0)) || !std::isfinite(th(2))) {
                         return false;
                     }
                     const BgParams p(th(0), sigma, th(2));
                     f = -log_likelihood(p, data);
                     const ScoreVector s = score(p, data);
                     g.resize(3);
                     g << -s[0], -s[1] * sigma, -s[2];
                     return std::isfinite(f) && g.allFinite();
                 }};

    auto ll_of = [&](const Eigen::VectorXd& x) { return log_likelihood(BgParams(x(0), x(1), x(2)), data); };
    auto grad_of = [&](const Eigen::VectorXd& x) {
        const ScoreVector s = score(BgParams(x(0), x(1), x(2)), data);
        return Eigen::Vector3d(s[0], s[1], s[2]);
    };
    auto hess_of = [&](const Eigen::VectorXd& x) { return Eigen::Matrix3d(hessian(BgParams(x(0), x(1), x(2)), data)); };

    std::optional<Candidate> best;
    for (const auto& start : starts) {
        Minimum mn;
        try {
            mn = bfgs(prob, start, options.max_iter, options.tol);
        } catch (const Error&) {
            continue;
        }
        Eigen::VectorXd x(3);
        x << mn.theta(0), std::exp(mn.theta(1)), mn.theta(2);
        double ll = -mn.f;
        const int extra = newton_polish(x, ll, ll_of, grad_of, hess_of, options.tol);
        Candidate c{x, ll, mn.iterations + extra};
        if (!best || c.loglik > best->loglik + 1e-8 ||
            (std::abs(c.loglik - best->loglik) <= 1e-8 && std::abs(c.x(2)) < std::abs(best->x(2)))) {
            best = c;
        }
    }
    if (!best) throw DomainError("fit_mle: every start failed");

    FitResult r;
    r.params = BgParams(best->x(0), best->x(1), best->x(2));
    r.log_likelihood = best->loglik;
    r.n_obs = data.size();
    r.iterations = best->iterations;
    r.grad_norm_at_solution = norm3(score(r.params, data));
    r.converged = r.grad_norm_at_solution < options.tol * std::max(1.0, std::abs(r.log_likelihood));
    r.std_errors = std_errors_from(-hessian(r.params, data));
    try {
        r.expected_std_errors = std_errors_from(static_cast<double>(data.size()) * fisher_information(r.params));
    } catch (const Error&) {
        r.expected_std_errors = std::nullopt;
    }
    return r;
}

FitResult fit_gumbel_mle(std::span<const double> data, const FitOptions& options) {
    check_fit_data(data);
    const Moments2 m = summarize(data);
    double sigma0 = m.sd * std::sqrt(6.0) / pi;
    double mu0 = m.mean - euler_gamma * sigma0;
    if (options.init) {
        mu0 = options.init->mu;
        sigma0 = options.init->sigma;
    }

    Problem prob{2, [&](const Eigen::VectorXd& th, double& f, Eigen::VectorXd& g) {
                     const double sigma = std::exp(th(1));
                     if (!std::isfinite(sigma) || !(sigma > 0.0) || !std::isfinite(th(0))) return false;
                     const BgParams p(th(0), sigma, 0.0);
                     f = -log_likelihood(p, data);
                     const ScoreVector s = score(p, data);
                     g.resize(2);
                     g << -s[0], -s[1] * sigma;
                     return std::isfinite(f) && g.allFinite();
                 }};
    const Minimum mn = bfgs(prob, Eigen::Vector2d(mu0, std::log(sigma0)), options.max_iter, options.tol);

    auto ll_of = [&](const Eigen::VectorXd& x) { return log_likelihood(BgParams(x(0), x(1), 0.0), data); };
    auto grad_of = [&](const Eigen::VectorXd& x) {
        const ScoreVector s = score(BgParams(x(0), x(1), 0.0), data);
        return Eigen::Vector2d(s[0], s[1]);
    };
    auto hess_of = [&](const Eigen::VectorXd& x) {
        return Eigen::Matrix2d(hessian(BgParams(x(0), x(1), 0.0), data).topLeftCorner<2, 2>());
    };
    Eigen::VectorXd x(2);
    x << mn.theta(0), std::exp(mn.theta(1));
    double ll = -mn.f;
    const int extra = newton_polish(x, ll, ll_of, grad_of, hess_of, options.tol);

    FitResult r;
    r.params = BgParams(x(0), x(1), 0.0);
    r.log_likelihood = ll;
    r.n_obs = data.size();
    r.iterations = mn.iterations + extra;
    const ScoreVector s = score(r.params, data);
    r.grad_norm_at_solution = std::hypot(s[0], s[1]);
    r.converged = r.grad_norm_at_solution < options.tol * std::max(1.0, std::abs(r.log_likelihood));
    const Eigen::Matrix2d obs = -hessian(r.params, data).topLeftCorner<2, 2>();
    r.std_errors = std_errors_from(obs);
    try {
        const Eigen::Matrix2d exp_info =
            static_cast<double>(data.size()) * fisher_information(r.params).topLeftCorner<2, 2>();
        r.expected_std_errors = std_errors_from(exp_info);
    } catch (const Error&) {
        r.expected_std_errors = std::nullopt;
    }
    return r;
}

}  // namespace bgumbel
