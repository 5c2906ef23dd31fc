#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "bgumbel/distribution.hpp"

namespace bgumbel {

enum class Modality { unimodal, bimodal };

const char* to_string(Modality m);

/// The four inequalities that define the parameter set C, each evaluated literally.
struct ConditionC {
    bool cond1 = false;  ///< delta > max{1, (exp(mu/sigma) - 1)/sigma}
    bool cond2 = false;  ///< g(-1) > 0
    bool cond3 = false;  ///< g(2) > 0
    bool cond4 = false;  ///< g(3) < 0
    bool holds() const { return cond1 && cond2 && cond3 && cond4; }
};

struct ShapeReport {
    Modality modality = Modality::unimodal;
    std::vector<double> modes;      ///< ascending, 1 or 2 entries
    std::optional<double> antimode;
    std::vector<double> roots;      ///< every root of g, ascending
    bool condition_c_holds = false;
    bool r2_in_d = false;           ///< antimode lies in D (only when C holds)
    std::optional<std::pair<double, double>> d_interval;
};

struct HazardPoint {
    double x = 0.0;
    double survival = 1.0;
    double hazard = 0.0;
};

enum class Trend { increasing, decreasing };

/// A grid segment on which the hazard was observed to move one way.
struct HazardSegment {
    double lo = 0.0;
    double hi = 0.0;
    Trend trend = Trend::increasing;
};

/// An interval on which monotonicity is guaranteed when C holds and r2 is in D.
struct GuaranteedSegment {
    double lo = 0.0;
    double hi = 0.0;
    Trend trend = Trend::increasing;
};

struct HazardMonotonicity {
    std::vector<HazardSegment> observed;
    std::vector<GuaranteedSegment> guaranteed;
};

/// g(x) = (exp(-(x - mu)/sigma) - 1)/sigma - 2 delta (1 - delta x) / [(1 - delta x)^2 + 1];
/// the density satisfies f' = f g.
double critical_function_g(const BgParams& p, double x);

ConditionC check_condition_c(const BgParams& p);

/// The interval where 2 delta^2 [(1-dx)^2 - 1]/[(1-dx)^2 + 1] < -exp(-(x-mu)/sigma)/sigma^2.
///
/// Throws PreconditionError unless C holds. Returns nullopt if the
/// inequality never holds on (0, 2/delta).
std::optional<std::pair<double, double>> d_interval(const BgParams& p);

/// Locates every root of g and classifies modes and the antimode.
///
/// All roots lie in [mu - sigma ln(1 + sigma |delta|), mu + sigma ln 2]
/// union [1/delta - 4 sigma, 1/delta + 4 sigma]; both windows are sign
/// scanned and each crossing is bisected to machine precision.
ShapeReport find_modes(const BgParams& p);

HazardPoint hazard(const BgParams& p, double x, const QuadratureSpec& spec = {});

/// Sign-of-slope segments of the hazard on an n-point grid over [lo, hi],
/// plus the intervals where monotonicity is guaranteed.
HazardMonotonicity hazard_monotonicity(const BgParams& p, double lo, double hi, int n,
                                       const QuadratureSpec& spec = {});

/// -lim d ln f / dx as x -> inf, which is 1/sigma for every BG law.
double tail_rate(const BgParams& p);

namespace detail {

/// First maximal sub-interval of [lo, hi] on which fn < 0, located on an
/// n-point grid and refined by bisection; nullopt if fn >= 0 on the grid.
std::optional<std::pair<double, double>> negative_interval(const std::function<double(double)>& fn, double lo,
                                                           double hi, int n);

}  // namespace detail

}  // namespace bgumbel
