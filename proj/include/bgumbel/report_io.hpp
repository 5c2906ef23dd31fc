#pragma once

#include <filesystem>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "bgumbel/model_selection.hpp"

namespace bgumbel {

inline constexpr const char* kToolVersion = "1.0.0";

/// One numeric column; a non-numeric first line is treated as a header.
/// Throws DataError on unreadable files or malformed rows.
std::vector<double> read_csv_column(const std::filesystem::path& path);
std::vector<double> parse_csv_column(const std::string& text);

/// Single-column CSV with header "draw".
std::string chain_to_csv(std::span<const double> draws);

struct RunManifest {
    std::string command;
    std::map<std::string, std::string> params;
    std::uint64_t seed = 0;
    std::string tool_version = kToolVersion;
    std::string timestamp;  ///< UTC, ISO 8601
};

/// The current UTC time as YYYY-MM-DDTHH:MM:SSZ.
std::string utc_timestamp();

/// Fields: model, ks_stat, ks_p, aic, bic, n.
std::string gof_report_to_json(const GofReport& r);
GofReport gof_report_from_json(const std::string& text);

std::string manifest_to_json(const RunManifest& m);

/// Full comparison report with fitted parameters and standard errors.
std::string comparison_to_json(const Comparison& c, const RunManifest& m, const std::string& extra_json = "{}");

/// Writes through a temporary file in the same directory and renames it into place.
void write_atomic(const std::filesystem::path& path, const std::string& content);

}  // namespace bgumbel
