#include "bgumbel/shape.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "bgumbel/errors.hpp"

namespace bgumbel {

namespace {

constexpr int kInitialGrid = 4096;
constexpr int kMaxGrid = 65536;

// Bisect a sign change of fn on [lo, hi] down to adjacent doubles.
double bisect(const std::function<double(double)>& fn, double lo, double hi) {
    double flo = fn(lo);
    if (flo == 0.0) return lo;
    if (fn(hi) == 0.0) return hi;
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        const double fm = fn(mid);
        if (fm == 0.0) return mid;
        if ((fm > 0.0) == (flo > 0.0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

struct Crossing {
    double root;
    bool falling;  // + to -
};

struct Scan {
    std::vector<Crossing> crossings;
    bool suspicious = false;  // a dip toward zero without a sign change
    double spacing = 0.0;
};

Scan scan_window(const std::function<double(double)>& fn, double lo, double hi, int n) {
    Scan out;
    out.spacing = (hi - lo) / (n - 1);
    std::vector<double> xs(n);
    std::vector<double> fs(n);
    for (int i = 0; i < n; ++i) {
        xs[i] = (i == n - 1) ? hi : lo + i * out.spacing;
        fs[i] = fn(xs[i]);
    }
    for (int i = 0; i + 1 < n; ++i) {
        if (fs[i] == 0.0) {
            const bool falling = i > 0 ? fs[i - 1] > 0.0 : fs[i + 1] < 0.0;
            out.crossings.push_back({xs[i], falling});
            continue;
        }
        if ((fs[i] > 0.0) != (fs[i + 1] > 0.0) && fs[i + 1] != 0.0) {
            out.crossings.push_back({bisect(fn, xs[i], xs[i + 1]), fs[i] > 0.0});
        }
    }
    for (int i = 1; i + 1 < n; ++i) {
        const double a = std::abs(fs[i - 1]);
        const double b = std::abs(fs[i]);
        const double c = std::abs(fs[i + 1]);
        const bool same_sign = (fs[i - 1] > 0.0) == (fs[i] > 0.0) && (fs[i] > 0.0) == (fs[i + 1] > 0.0);
        if (same_sign && b < a && b < c && b < (a - b) + (c - b)) out.suspicious = true;
    }
    return out;
}

std::vector<std::pair<double, double>> root_windows(const BgParams& p) {
    const double s = p.sigma;
    const double ad = std::abs(p.delta);
    const double left = p.mu - s * std::log1p(s * ad) - s;
    const double right = p.mu + s * std::log(2.0) + s;
    std::vector<std::pair<double, double>> windows{{left, right}};
    if (p.delta != 0.0) {
        const double c = 1.0 / p.delta;
        double lo = std::max(c - 5.0 * s, left);
        double hi = c + 5.0 * s;
        if (hi > lo) windows.emplace_back(lo, hi);
    }
    std::sort(windows.begin(), windows.end());
    std::vector<std::pair<double, double>> merged;
    for (const auto& w : windows) {
        if (!merged.empty() && w.first <= merged.back().second) {
            merged.back().second = std::max(merged.back().second, w.second);
        } else {
            merged.push_back(w);
        }
    }
    return merged;
}

}  // namespace

const char* to_string(Modality m) { return m == Modality::bimodal ? "bimodal" : "unimodal"; }

double critical_function_g(const BgParams& p, double x) {
    const double u = 1.0 - p.delta * x;
    return (std::exp(-(x - p.mu) / p.sigma) - 1.0) / p.sigma - 2.0 * p.delta * u / (u * u + 1.0);
}

ConditionC check_condition_c(const BgParams& p) {
    const double m = p.mu;
    const double s = p.sigma;
    const double d = p.delta;
    auto ratio = [d](double u) { return 2.0 * d * u / (u * u + 1.0); };
    ConditionC c;
    c.cond1 = d > std::max(1.0, (std::exp(m / s) - 1.0) / s);
    c.cond2 = ratio(1.0 + d) < (std::exp((1.0 + m) / s) - 1.0) / s;
    c.cond3 = ratio(1.0 - 2.0 * d) < (std::exp(-(2.0 - m) / s) - 1.0) / s;
    c.cond4 = ratio(1.0 - 3.0 * d) > (std::exp(-(3.0 - m) / s) - 1.0) / s;
    return c;
}

namespace detail {

std::optional<std::pair<double, double>> negative_interval(const std::function<double(double)>& fn, double lo,
                                                           double hi, int n) {
    if (n < 2 || !(hi > lo)) throw DomainError("negative_interval: need n >= 2 and hi > lo");
    const double h = (hi - lo) / (n - 1);
    int first = -1;
    int last = -1;
    for (int i = 0; i < n; ++i) {
        const double x = (i == n - 1) ? hi : lo + i * h;
        if (fn(x) < 0.0) {
            if (first < 0) first = i;
            last = i;
        } else if (first >= 0) {
            break;
        }
    }
    if (first < 0) return std::nullopt;
    const double x_first = lo + first * h;
    const double x_last = (last == n - 1) ? hi : lo + last * h;
    const double a = first == 0 ? lo : bisect(fn, x_first - h, x_first);
    const double b = last == n - 1 ? hi : bisect(fn, x_last, x_last + h);
    return std::make_pair(a, b);
}

}  // namespace detail

std::optional<std::pair<double, double>> d_interval(const BgParams& p) {
    if (!check_condition_c(p).holds()) {
        throw PreconditionError("d_interval: D is only defined for parameters in C");
    }
    const double d = p.delta;
    const double s = p.sigma;
    auto h = [&](double x) {
        const double u = 1.0 - d * x;
        return 2.0 * d * d * (u * u - 1.0) / (u * u + 1.0) + std::exp(-(x - p.mu) / s) / (s * s);
    };
    // Outside (0, 2/delta) the left-hand side is non-negative, so D lies inside it.
    return detail::negative_interval(h, 0.0, 2.0 / d, 16384);
}

ShapeReport find_modes(const BgParams& p) {
    auto g = [&p](double x) { return critical_function_g(p, x); };
    const auto windows = root_windows(p);

    std::vector<Crossing> crossings;
    std::size_t previous = std::numeric_limits<std::size_t>::max();
    bool suspicious = false;
    double spacing = 0.0;
    for (int n = kInitialGrid; n <= kMaxGrid; n *= 2) {
        crossings.clear();
        suspicious = false;
        spacing = 0.0;
        for (const auto& [lo, hi] : windows) {
            Scan s = scan_window(g, lo, hi, n);
            crossings.insert(crossings.end(), s.crossings.begin(), s.crossings.end());
            suspicious = suspicious || s.suspicious;
            spacing = std::max(spacing, s.spacing);
        }
        if (crossings.size() == previous && !suspicious) break;
        previous = crossings.size();
    }
    std::sort(crossings.begin(), crossings.end(), [](const Crossing& a, const Crossing& b) { return a.root < b.root; });

    for (std::size_t i = 1; i < crossings.size(); ++i) {
        if (crossings[i].root - crossings[i - 1].root < spacing) {
            std::ostringstream msg;
            msg << "find_modes: roots " << crossings[i - 1].root << " and " << crossings[i].root
                << " are closer than the finest grid spacing";
            throw RootIsolationError(msg.str());
        }
    }

    ShapeReport report;
    std::vector<double> antimodes;
    for (const auto& c : crossings) {
        report.roots.push_back(c.root);
        (c.falling ? report.modes : antimodes).push_back(c.root);
    }
    if (report.modes.empty() || report.modes.size() > 2 || antimodes.size() + 1 != report.modes.size()) {
        std::ostringstream msg;
        msg << "find_modes: inconsistent root structure (" << report.modes.size() << " modes, " << antimodes.size()
            << " antimodes)";
        throw RootIsolationError(msg.str());
    }
    report.modality = report.modes.size() == 2 ? Modality::bimodal : Modality::unimodal;
    if (!antimodes.empty()) report.antimode = antimodes.front();

    report.condition_c_holds = check_condition_c(p).holds();
    if (report.condition_c_holds) {
        report.d_interval = d_interval(p);
        if (report.d_interval && report.antimode) {
            report.r2_in_d = *report.antimode > report.d_interval->first && *report.antimode < report.d_interval->second;
        }
    }
    return report;
}

HazardPoint hazard(const BgParams& p, double x, const QuadratureSpec& spec) {
    HazardPoint pt;
    pt.x = x;
    pt.survival = bg_survival(p, x, spec);
    const double f = bg_pdf(p, x);
    if (pt.survival < 1e-300) {
        pt.hazard = tail_rate(p);
        return pt;
    }
    pt.hazard = f / pt.survival;
    return pt;
}

HazardMonotonicity hazard_monotonicity(const BgParams& p, double lo, double hi, int n, const QuadratureSpec& spec) {
    if (n < 3 || !(hi > lo)) throw DomainError("hazard_monotonicity: need n >= 3 and hi > lo");
    HazardMonotonicity out;
    const double step = (hi - lo) / (n - 1);
    double prev_x = lo;
    double prev_h = hazard(p, lo, spec).hazard;
    for (int i = 1; i < n; ++i) {
        const double x = lo + i * step;
        const double h = hazard(p, x, spec).hazard;
        const Trend t = h >= prev_h ? Trend::increasing : Trend::decreasing;
        if (!out.observed.empty() && out.observed.back().trend == t) {
            out.observed.back().hi = x;
        } else {
            out.observed.push_back({prev_x, x, t});
        }
        prev_x = x;
        prev_h = h;
    }

    const ShapeReport shape = find_modes(p);
    if (shape.condition_c_holds && shape.r2_in_d && shape.roots.size() == 3) {
        const double inf = std::numeric_limits<double>::infinity();
        out.guaranteed.push_back({-inf, shape.roots[0], Trend::increasing});
        out.guaranteed.push_back({shape.roots[1], shape.roots[2], Trend::increasing});
        out.guaranteed.push_back({shape.d_interval->first, shape.d_interval->second, Trend::decreasing});
    }
    return out;
}

double tail_rate(const BgParams& p) { return 1.0 / p.sigma; }

}  // namespace bgumbel
