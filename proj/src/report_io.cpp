#include "bgumbel/report_io.hpp"

#include <charconv>
#include <chrono>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <random>
#include <sstream>

#include <json.hpp>

#include "bgumbel/errors.hpp"

namespace bgumbel {

using json = nlohmann::ordered_json;

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

bool parse_double(const std::string& s, double& out) {
    const char* first = s.data();
    const char* last = s.data() + s.size();
    if (first != last && *first == '+') ++first;
    const auto [ptr, ec] = std::from_chars(first, last, out);
    return ec == std::errc() && ptr == last;
}

json fit_to_json(const ModelFit& m) {
    json j;
    j["model"] = m.report.model_name;
    j["ks_stat"] = m.report.ks_statistic;
    j["ks_p"] = m.report.ks_p_value;
    j["aic"] = m.report.aic;
    j["bic"] = m.report.bic;
    j["n"] = m.report.n_obs;
    j["params"] = {{"mu", m.fit.params.mu}, {"sigma", m.fit.params.sigma}, {"delta", m.fit.params.delta}};
    auto se_json = [](const std::optional<std::array<double, 3>>& se) {
        if (!se) return json(nullptr);
        return json{{"mu", (*se)[0]}, {"sigma", (*se)[1]}, {"delta", (*se)[2]}};
    };
    j["std_errors"] = se_json(m.fit.std_errors);
    j["expected_std_errors"] = se_json(m.fit.expected_std_errors);
    j["log_likelihood"] = m.fit.log_likelihood;
    j["converged"] = m.fit.converged;
    j["iterations"] = m.fit.iterations;
    j["grad_norm"] = m.fit.grad_norm_at_solution;
    return j;
}

json manifest_json(const RunManifest& m) {
    json params = json::object();
    for (const auto& [k, v] : m.params) params[k] = v;
    return {{"command", m.command},
            {"params", params},
            {"seed", m.seed},
            {"tool_version", m.tool_version},
            {"timestamp", m.timestamp}};
}

}  // namespace

std::vector<double> parse_csv_column(const std::string& text) {
    std::istringstream in(text);
    std::vector<double> out;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string cell = trim(line);
        if (cell.empty()) continue;
        double v;
        if (!parse_double(cell, v) || !std::isfinite(v)) {
            if (out.empty() && lineno == 1) continue;  // header
            throw DataError("csv: line " + std::to_string(lineno) + " is not a number: '" + cell + "'");
        }
        out.push_back(v);
    }
    if (out.empty()) throw DataError("csv: no numeric rows");
    return out;
}

std::vector<double> read_csv_column(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw DataError("csv: cannot open " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_csv_column(ss.str());
}

std::string chain_to_csv(std::span<const double> draws) {
    std::string out = "draw\n";
    char buf[32];
    for (double x : draws) {
        const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
        out.append(buf, ptr);
        out.push_back('\n');
    }
    return out;
}

std::string utc_timestamp() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

std::string gof_report_to_json(const GofReport& r) {
    const json j = {{"model", r.model_name}, {"ks_stat", r.ks_statistic}, {"ks_p", r.ks_p_value},
                    {"aic", r.aic},          {"bic", r.bic},              {"n", r.n_obs}};
    return j.dump(2) + "\n";
}

GofReport gof_report_from_json(const std::string& text) {
    try {
        const json j = json::parse(text);
        GofReport r;
        r.model_name = j.at("model").get<std::string>();
        r.ks_statistic = j.at("ks_stat").get<double>();
        r.ks_p_value = j.at("ks_p").get<double>();
        r.aic = j.at("aic").get<double>();
        r.bic = j.at("bic").get<double>();
        r.n_obs = j.at("n").get<std::size_t>();
        return r;
    } catch (const json::exception& e) {
        throw DataError(std::string("gof report: ") + e.what());
    }
}

std::string manifest_to_json(const RunManifest& m) { return manifest_json(m).dump(2) + "\n"; }

std::string comparison_to_json(const Comparison& c, const RunManifest& m, const std::string& extra_json) {
    json j;
    j["manifest"] = manifest_json(m);
    j["centered"] = c.centered;
    j["center"] = c.center;
    json models = json::array();
    if (c.bg) models.push_back(fit_to_json(*c.bg));
    if (c.gumbel) models.push_back(fit_to_json(*c.gumbel));
    j["models"] = models;
    json errors = json::object();
    if (!c.bg_error.empty()) errors["BG"] = c.bg_error;
    if (!c.gumbel_error.empty()) errors["Gumbel"] = c.gumbel_error;
    j["errors"] = errors;
    j["preferred"] = c.preferred.empty() ? json(nullptr) : json(c.preferred);
    const json extra = json::parse(extra_json);
    for (const auto& [k, v] : extra.items()) j[k] = v;
    return j.dump(2) + "\n";
}

void write_atomic(const std::filesystem::path& path, const std::string& content) {
    const std::filesystem::path dir = path.has_parent_path() ? path.parent_path() : std::filesystem::path(".");
    std::random_device rd;
    const std::filesystem::path tmp = dir / (path.filename().string() + ".tmp" + std::to_string(rd()));
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw DataError("cannot write " + tmp.string());
        out << content;
        out.flush();
        if (!out) throw DataError("write failed for " + tmp.string());
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::filesystem::remove(tmp);
        throw DataError("cannot rename into " + path.string() + ": " + ec.message());
    }
}

}  // namespace bgumbel
