#pragma once

// Report documents. JSON keys appear in a fixed order and wall_time_ms is
// always last; everything before it is a pure function of the run config.
//
//   {"schema_version": "1", "campaign", "seed", "mutant"?, "iterations_run",
//    "violations", "first_violation_iteration"?,
//    "counterexample"?: {"input", "output_original", "output_variant"},
//    "execution_errors", "statistics"?: {"k", "median_original",
//    "median_variant"}, "wall_time_ms"}
//
// Optional keys are omitted when absent. The CSV form is one header row and
// one data row over the same columns, with empty cells for absent values.

#include "intramorph/harness.hpp"

#include <string>
#include <string_view>

#include <json.hpp>

namespace intramorph {

enum class ReportFormat { json, csv };

/// Throws ConfigurationError for anything but "json" or "csv".
ReportFormat parse_report_format(std::string_view text);

inline constexpr std::string_view report_schema_version = "1";

nlohmann::ordered_json to_json(const CampaignReport& report);
nlohmann::ordered_json to_json(const DetectionMatrix& matrix);

/// Serialized document, newline-terminated.
std::string format_report(const CampaignReport& report, ReportFormat format);
/// CSV: one row per (campaign, mutant) cell.
std::string format_matrix(const DetectionMatrix& matrix, ReportFormat format);

std::string csv_escape(std::string_view field);

} // namespace intramorph
