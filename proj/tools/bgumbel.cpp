// bgumbel: command-line front end for the bimodal Gumbel library.
//
// Exit codes: 0 ok, 2 usage or input error, 3 numeric failure,
// 4 a fit did not converge (the partial report is still written).

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "bgumbel/distribution.hpp"
#include "bgumbel/errors.hpp"
#include "bgumbel/inference.hpp"
#include "bgumbel/model_selection.hpp"
#include "bgumbel/report_io.hpp"
#include "bgumbel/sampling.hpp"
#include "bgumbel/shape.hpp"

using namespace bgumbel;
using json = nlohmann::ordered_json;

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitNumeric = 3;
constexpr int kExitNoConvergence = 4;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::uint64_t default_seed() {
    if (const char* env = std::getenv("BGUMBEL_SEED")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw UsageError(std::string("BGUMBEL_SEED is not an unsigned integer: ") + env);
        }
    }
    return 0;
}

std::string num(double v) {
    std::ostringstream s;
    s.precision(17);
    s << v;
    return s.str();
}

void emit(const std::string& content, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << content;
    } else {
        write_atomic(out_path, content);
    }
}

void emit_manifest(const RunManifest& m, const std::string& out_path) {
    if (!out_path.empty()) write_atomic(out_path + ".manifest.json", manifest_to_json(m));
}

RunManifest make_manifest(const std::string& command, std::map<std::string, std::string> params, std::uint64_t seed) {
    RunManifest m;
    m.command = command;
    m.params = std::move(params);
    m.seed = seed;
    m.timestamp = utc_timestamp();
    return m;
}

struct ParamFlags {
    double mu = 0.0;
    double sigma = 1.0;
    double delta = 0.0;

    void add_to(CLI::App* app) {
        app->add_option("--mu", mu, "location")->required();
        app->add_option("--sigma", sigma, "scale, > 0")->required();
        app->add_option("--delta", delta, "bimodality parameter")->required();
    }
    BgParams params() const { return {mu, sigma, delta}; }
    std::map<std::string, std::string> echo() const {
        return {{"mu", num(mu)}, {"sigma", num(sigma)}, {"delta", num(delta)}};
    }
};

std::vector<double> grid_points(const std::string& grid, const std::optional<double>& at) {
    if (at) return {*at};
    if (grid.empty()) throw UsageError("give --grid lo:hi:n or --at x");
    std::vector<std::string> parts;
    std::stringstream ss(grid);
    for (std::string item; std::getline(ss, item, ':');) parts.push_back(item);
    if (parts.size() != 3) throw UsageError("--grid must look like lo:hi:n");
    double lo;
    double hi;
    long n;
    try {
        lo = std::stod(parts[0]);
        hi = std::stod(parts[1]);
        n = std::stol(parts[2]);
    } catch (const std::exception&) {
        throw UsageError("--grid must look like lo:hi:n");
    }
    if (n < 1 || (n > 1 && !(hi > lo))) throw UsageError("--grid needs n >= 1 and hi > lo");
    std::vector<double> xs(static_cast<std::size_t>(n));
    for (long i = 0; i < n; ++i) xs[i] = n == 1 ? lo : lo + (hi - lo) * static_cast<double>(i) / (n - 1);
    return xs;
}

json shape_json(const ShapeReport& r) {
    json j;
    j["modality"] = to_string(r.modality);
    j["modes"] = r.modes;
    j["antimode"] = r.antimode ? json(*r.antimode) : json(nullptr);
    j["roots"] = r.roots;
    j["condition_c_holds"] = r.condition_c_holds;
    j["d_interval"] = r.d_interval ? json::array({r.d_interval->first, r.d_interval->second}) : json(nullptr);
    j["antimode_in_d"] = r.r2_in_d;
    return j;
}

json moments_json(const MomentSet& m) {
    return {{"mean", m.mean},         {"second_raw", m.second_raw}, {"third_raw", m.third_raw},
            {"variance", m.variance}, {"skewness", m.skewness},     {"kurtosis", m.kurtosis}};
}

// ---- eval -----------------------------------------------------------------

struct EvalOpts {
    ParamFlags p;
    std::string what = "pdf";
    std::string grid;
    std::optional<double> at;
    std::string out;
};

int run_eval(const EvalOpts& o) {
    const BgParams p = o.p.params();
    std::string content;
    if (o.what == "moments") {
        content = moments_json(bg_moment_set(p)).dump(2) + "\n";
    } else if (o.what == "shape") {
        content = shape_json(find_modes(p)).dump(2) + "\n";
    } else {
        std::ostringstream s;
        s.precision(17);
        if (o.what == "hazard") {
            s << "x,survival,hazard\n";
            for (double x : grid_points(o.grid, o.at)) {
                const HazardPoint h = hazard(p, x);
                s << x << ',' << h.survival << ',' << h.hazard << '\n';
            }
        } else {
            s << "x," << o.what << '\n';
            for (double x : grid_points(o.grid, o.at)) s << x << ',' << (o.what == "pdf" ? bg_pdf(p, x) : bg_cdf(p, x)) << '\n';
        }
        content = s.str();
    }
    emit(content, o.out);
    auto params = o.p.echo();
    params["what"] = o.what;
    if (!o.grid.empty()) params["grid"] = o.grid;
    if (o.at) params["at"] = num(*o.at);
    emit_manifest(make_manifest("eval", params, 0), o.out);
    return 0;
}

// ---- sample ---------------------------------------------------------------

struct SampleOpts {
    ParamFlags p;
    std::size_t n = 10000;
    std::optional<std::uint64_t> seed;
    std::string method = "mh";
    std::optional<std::size_t> burn_in;
    std::optional<double> scale;
    std::size_t thin = 1;
    std::string out;
};

int run_sample(const SampleOpts& o) {
    const BgParams p = o.p.params();
    const std::uint64_t seed = o.seed ? *o.seed : default_seed();
    std::vector<double> draws;
    auto params = o.p.echo();
    params["method"] = o.method;
    params["n"] = std::to_string(o.n);
    if (o.method == "mh") {
        McmcConfig cfg = McmcConfig::defaults_for(p, 0, seed);
        cfg.thin = o.thin;
        cfg.burn_in = o.burn_in ? *o.burn_in : o.n * o.thin / 9;
        cfg.n_iterations = cfg.burn_in + o.n * o.thin;
        if (o.scale) cfg.proposal_scale = *o.scale;
        const Chain c = mh_sample(p, cfg);
        draws = c.draws;
        params["burn_in"] = std::to_string(cfg.burn_in);
        params["proposal_scale"] = num(cfg.proposal_scale);
        params["thin"] = std::to_string(cfg.thin);
        params["acceptance_rate"] = num(c.acceptance_rate);
        if (c.acceptance_flagged()) {
            std::cerr << "warning: acceptance rate " << c.acceptance_rate << " is outside [0.1, 0.6]\n";
        }
    } else {
        draws = representation_sample(p, o.n, seed);
    }
    emit(chain_to_csv(draws), o.out);
    emit_manifest(make_manifest("sample", params, seed), o.out);
    return 0;
}

// ---- simulate-table1 ------------------------------------------------------

struct SimulateOpts {
    std::size_t n = 100000;
    std::optional<std::uint64_t> seed;
    std::string out;
    std::string trace_dir;
};

int run_simulate(const SimulateOpts& o) {
    const std::uint64_t seed = o.seed ? *o.seed : default_seed();
    const BgParams rows[] = {{-2, 1, -1}, {-1, 2, -1}, {-1, 2, -2}, {-2, 2, -1}};
    std::ostringstream md;
    md << "| mu | sigma | delta | n | sample mean | E(X) | bias(mean) | sample variance | Var(X) | bias(variance) |\n"
       << "|---:|---:|---:|---:|---:|---:|---:|---:|---:|---:|\n";
    md.setf(std::ios::fixed);
    if (!o.trace_dir.empty()) std::filesystem::create_directories(o.trace_dir);
    int row_index = 0;
    for (const BgParams& p : rows) {
        ++row_index;
        McmcConfig cfg = McmcConfig::defaults_for(p, 0, seed + static_cast<std::uint64_t>(row_index));
        cfg.burn_in = o.n / 10;
        cfg.n_iterations = cfg.burn_in + o.n;
        const Chain c = mh_sample(p, cfg);
        const MomentSet m = bg_moment_set(p);
        std::vector<std::size_t> sizes;
        for (std::size_t k : {std::size_t{1000}, std::size_t{10000}, std::size_t{100000}}) {
            if (k < o.n) sizes.push_back(k);
        }
        sizes.push_back(o.n);
        for (std::size_t k : sizes) {
            const std::span<const double> prefix(c.draws.data(), k);
            const ChainSummary s = chain_summary(prefix);
            const MomentBias b = s.bias_vs(p);
            md << std::setprecision(0) << "| " << p.mu << " | " << p.sigma << " | " << p.delta << " | " << k
               << std::setprecision(4) << " | " << s.mean << " | " << m.mean << " | " << b.bias_mean << " | "
               << s.variance << " | " << m.variance << " | " << b.bias_variance << " |\n";
            if (!o.trace_dir.empty()) {
                const auto path = std::filesystem::path(o.trace_dir) /
                                  ("row" + std::to_string(row_index) + "_n" + std::to_string(k) + ".csv");
                write_atomic(path, chain_to_csv(prefix));
            }
        }
    }
    emit(md.str(), o.out);
    std::map<std::string, std::string> params{{"n", std::to_string(o.n)}};
    if (!o.trace_dir.empty()) params["trace_dir"] = o.trace_dir;
    emit_manifest(make_manifest("simulate-table1", params, seed), o.out);
    return 0;
}

// ---- fit ------------------------------------------------------------------

struct FitOpts {
    std::string input;
    std::string model = "both";
    bool center = true;
    std::optional<std::size_t> blocks;
    bool full_blocks_only = false;
    std::optional<std::size_t> lags;
    double lb_threshold = 0.017;
    std::string out;
};

int run_fit(const FitOpts& o) {
    std::vector<double> data;
    try {
        data = read_csv_column(o.input);
    } catch (const DataError& e) {
        throw UsageError(e.what());
    }
    json extra;
    extra["input"] = o.input;
    extra["n_raw"] = data.size();
    if (o.blocks) {
        const BlockMaximaConfig cfg{*o.blocks, !o.full_blocks_only};
        data = block_maxima(data, cfg);
        extra["blocks"] = {{"block_length", cfg.block_length},
                           {"allow_partial_last_block", cfg.allow_partial_last_block},
                           {"count", data.size()}};
    }
    const DescriptiveStats ds = descriptive_stats(data);
    extra["descriptive"] = {{"mean", ds.mean}, {"median", ds.median}, {"max", ds.max}, {"min", ds.min}, {"std_dev", ds.std_dev}};

    const std::size_t lags = o.lags ? *o.lags : default_ljung_box_lags(data.size());
    try {
        const TestResult lb = ljung_box(data, lags);
        extra["ljung_box"] = {{"lags", lags}, {"statistic", lb.statistic}, {"p_value", lb.p_value}, {"threshold", o.lb_threshold}};
        if (lb.p_value < o.lb_threshold) {
            std::cerr << "warning: Ljung-Box p-value " << lb.p_value << " is below " << o.lb_threshold
                      << "; serial independence is doubtful\n";
        }
    } catch (const DataError& e) {
        extra["ljung_box"] = {{"lags", lags}, {"error", e.what()}};
    }

    CompareOptions copts;
    copts.center = o.center;
    Comparison cmp;
    if (o.model == "both") {
        cmp = compare_models(data, copts);
    } else {
        std::vector<double> x = data;
        if (o.center) {
            cmp.centered = true;
            cmp.center = ds.mean;
            for (double& v : x) v -= ds.mean;
        }
        try {
            if (o.model == "bg") {
                const FitResult f = fit_mle(x);
                cmp.bg = ModelFit{f, gof_report("BG", f, x, 3)};
                cmp.preferred = "BG";
            } else {
                const FitResult f = fit_gumbel_mle(x);
                cmp.gumbel = ModelFit{f, gof_report("Gumbel", f, x, 2)};
                cmp.preferred = "Gumbel";
            }
        } catch (const Error& e) {
            (o.model == "bg" ? cmp.bg_error : cmp.gumbel_error) = e.what();
        }
    }

    std::map<std::string, std::string> params{{"input", o.input}, {"model", o.model}, {"center", o.center ? "true" : "false"}};
    if (o.blocks) params["blocks"] = std::to_string(*o.blocks);
    params["ljung_box_lags"] = std::to_string(lags);
    const std::string report = comparison_to_json(cmp, make_manifest("fit", params, 0), extra.dump());
    emit(report, o.out);

    if (!cmp.bg && !cmp.gumbel) {
        std::cerr << "error: no model could be fitted\n";
        return kExitNumeric;
    }
    if (!cmp.bg_error.empty() || !cmp.gumbel_error.empty()) {
        std::cerr << "error: a model failed: " << cmp.bg_error << cmp.gumbel_error << "\n";
        return kExitNumeric;
    }
    const bool converged = (!cmp.bg || cmp.bg->fit.converged) && (!cmp.gumbel || cmp.gumbel->fit.converged);
    if (!converged) {
        std::cerr << "error: optimizer did not converge; partial report written\n";
        return kExitNoConvergence;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Bimodal Gumbel distribution: evaluation, sampling, fitting and model comparison"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kToolVersion);

    EvalOpts eval;
    auto* eval_cmd = app.add_subcommand("eval", "Evaluate pdf, cdf, hazard, moments or shape");
    eval.p.add_to(eval_cmd);
    eval_cmd->add_option("--what", eval.what, "quantity")->check(CLI::IsMember({"pdf", "cdf", "hazard", "moments", "shape"}));
    auto* grid_opt = eval_cmd->add_option("--grid", eval.grid, "lo:hi:n");
    eval_cmd->add_option("--at", eval.at, "single point")->excludes(grid_opt);
    eval_cmd->add_option("-o,--output", eval.out, "output file (default stdout)");

    SampleOpts sample;
    auto* sample_cmd = app.add_subcommand("sample", "Draw random variates");
    sample.p.add_to(sample_cmd);
    sample_cmd->add_option("--n", sample.n, "number of draws kept")->check(CLI::PositiveNumber);
    sample_cmd->add_option("--seed", sample.seed, "RNG seed (default $BGUMBEL_SEED or 0)");
    sample_cmd->add_option("--method", sample.method, "mh or representation")->check(CLI::IsMember({"mh", "representation"}));
    sample_cmd->add_option("--burn-in", sample.burn_in, "MH burn-in iterations (default 10% of the run)");
    sample_cmd->add_option("--scale", sample.scale, "MH proposal scale (default 2.4 sd)")->check(CLI::PositiveNumber);
    sample_cmd->add_option("--thin", sample.thin, "keep every k-th MH state")->check(CLI::PositiveNumber);
    sample_cmd->add_option("-o,--output", sample.out, "CSV file (default stdout)");

    SimulateOpts sim;
    auto* sim_cmd = app.add_subcommand("simulate-table1", "Sample vs population moments for the four reference rows");
    sim_cmd->add_option("--n", sim.n, "draws per chain after burn-in")->check(CLI::PositiveNumber);
    sim_cmd->add_option("--seed", sim.seed, "base RNG seed (default $BGUMBEL_SEED or 0)");
    sim_cmd->add_option("--trace-dir", sim.trace_dir, "write chain prefixes (n = 1e3, 1e4, 1e5) as CSV here");
    sim_cmd->add_option("-o,--output", sim.out, "markdown file (default stdout)");

    FitOpts fit;
    auto* fit_cmd = app.add_subcommand("fit", "Fit BG and/or Gumbel to a one-column CSV");
    fit_cmd->add_option("input", fit.input, "CSV file")->required();
    fit_cmd->add_option("--model", fit.model, "bg, gumbel or both")->check(CLI::IsMember({"bg", "gumbel", "both"}));
    fit_cmd->add_flag("--center,!--no-center", fit.center, "subtract the sample mean before fitting (default on)");
    fit_cmd->add_option("--blocks", fit.blocks, "reduce to block maxima of this length first")->check(CLI::PositiveNumber);
    fit_cmd->add_flag("--full-blocks-only", fit.full_blocks_only, "drop a trailing partial block");
    fit_cmd->add_option("--ljung-box-lags", fit.lags, "lags for the Ljung-Box screen (default min(10, n/5))")
        ->check(CLI::PositiveNumber);
    fit_cmd->add_option("--ljung-box-threshold", fit.lb_threshold, "warn below this p-value");
    fit_cmd->add_option("-o,--output", fit.out, "JSON report (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*eval_cmd) return run_eval(eval);
        if (*sample_cmd) return run_sample(sample);
        if (*sim_cmd) return run_simulate(sim);
        if (*fit_cmd) return run_fit(fit);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNumeric;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNumeric;
    }
    return kExitUsage;
}
