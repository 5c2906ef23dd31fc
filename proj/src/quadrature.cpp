#include "bgumbel/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <queue>
#include <sstream>
#include <vector>

#include "bgumbel/errors.hpp"

namespace bgumbel {

void QuadratureSpec::validate() const {
    if (!(abs_tol > 0.0) || !(rel_tol > 0.0) || max_subdivisions < 1) {
        throw DomainError("QuadratureSpec requires abs_tol > 0, rel_tol > 0 and max_subdivisions >= 1");
    }
}

namespace {

// Kronrod 15-point abscissae (non-negative half) and weights; the Gauss
// 7-point rule uses the odd-indexed nodes.
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};

constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};

constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
    double a;
    double b;
    double value;
    double error;
    bool operator<(const Segment& other) const { return error < other.error; }
};

Segment gauss_kronrod(const Integrand& f, double a, double b) {
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const double fc = f(center);
    double kronrod = fc * kWgk[7];
    double gauss = fc * kWg[3];
    for (int j = 0; j < 7; ++j) {
        const double dx = half * kXgk[j];
        const double sum = f(center - dx) + f(center + dx);
        kronrod += kWgk[j] * sum;
        if (j % 2 == 1) gauss += kWg[j / 2] * sum;
    }
    kronrod *= half;
    gauss *= half;
    return {a, b, kronrod, std::abs(kronrod - gauss)};
}

}  // namespace

QuadratureResult integrate(const Integrand& f, double a, double b, const QuadratureSpec& spec) {
    spec.validate();
    if (std::isnan(a) || std::isnan(b)) throw DomainError("integrate: NaN bound");
    if (a == b) return {};
    if (a > b) {
        auto r = integrate(f, b, a, spec);
        r.value = -r.value;
        return r;
    }
    if (std::isinf(a)) throw DomainError("integrate: lower bound must be finite");

    Integrand g = f;
    double lo = a;
    double hi = b;
    if (std::isinf(b)) {
        // x = a + (1 - t) / t, dx = dt / t^2; the node set never touches t = 0.
        g = [&f, a](double t) {
            const double x = a + (1.0 - t) / t;
            const double v = f(x);
            return v == 0.0 ? 0.0 : v / (t * t);
        };
        lo = 0.0;
        hi = 1.0;
    }

    std::priority_queue<Segment> heap;
    Segment first = gauss_kronrod(g, lo, hi);
    double total = first.value;
    double total_err = first.error;
    heap.push(first);
    int splits = 0;

    auto target = [&] { return std::max(spec.abs_tol, spec.rel_tol * std::abs(total)); };

    while (total_err > target()) {
        if (splits >= spec.max_subdivisions) {
            std::ostringstream msg;
            msg << "adaptive quadrature did not converge on [" << a << ", " << b << "]: estimate " << total
                << ", error estimate " << total_err;
            throw QuadratureError(msg.str(), total, total_err);
        }
        Segment worst = heap.top();
        heap.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        Segment left = gauss_kronrod(g, worst.a, mid);
        Segment right = gauss_kronrod(g, mid, worst.b);
        total += left.value + right.value - worst.value;
        total_err += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);
        ++splits;
    }

    // Recompute the sum from the leaves to shed accumulated rounding.
    double sum = 0.0;
    double err = 0.0;
    while (!heap.empty()) {
        sum += heap.top().value;
        err += heap.top().error;
        heap.pop();
    }
    return {sum, err, splits};
}

}  // namespace bgumbel
