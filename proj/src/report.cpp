#include "intramorph/report.hpp"

#include <sstream>
#include <vector>

namespace intramorph {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string number_text(double value) { return ordered_json(value).dump(); }

template <class T>
std::string optional_text(const std::optional<T>& value) {
  if (!value) {
    return {};
  }
  if constexpr (std::is_same_v<T, std::string>) {
    return *value;
  } else {
    return std::to_string(*value);
  }
}

std::string join_row(const std::vector<std::string>& fields) {
  std::string line;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    line += (i ? "," : "") + fields[i];
  }
  return line + "\n";
}

} // namespace

ReportFormat parse_report_format(std::string_view text) {
  if (text == "json") {
    return ReportFormat::json;
  }
  if (text == "csv") {
    return ReportFormat::csv;
  }
  throw ConfigurationError("unknown report format: " + std::string(text));
}

std::string csv_escape(std::string_view field) {
  std::string quoted = "\"";
  for (const char c : field) {
    if (c == '"') {
      quoted += '"';
    }
    quoted += c;
  }
  return quoted + "\"";
}

ordered_json to_json(const CampaignReport& report) {
  ordered_json doc;
  doc["schema_version"] = report_schema_version;
  doc["campaign"] = report.campaign;
  doc["seed"] = report.seed;
  if (report.mutant) {
    doc["mutant"] = *report.mutant;
  }
  doc["iterations_run"] = report.iterations_run;
  doc["violations"] = report.violations;
  if (report.first_violation_iteration) {
    doc["first_violation_iteration"] = *report.first_violation_iteration;
  }
  if (report.counterexample) {
    doc["counterexample"] = {
        {"input", report.counterexample->input},
        {"output_original", report.counterexample->output_original},
        {"output_variant", report.counterexample->output_variant},
    };
  }
  doc["execution_errors"] = report.execution_errors;
  if (report.statistics) {
    doc["statistics"] = {
        {"k", report.statistics->repetitions},
        {"median_original", report.statistics->median_original},
        {"median_variant", report.statistics->median_variant},
    };
  }
  doc["wall_time_ms"] = report.wall_time_ms;
  return doc;
}

ordered_json to_json(const DetectionMatrix& matrix) {
  ordered_json doc;
  doc["schema_version"] = report_schema_version;
  doc["seed"] = matrix.seed;
  doc["iterations"] = matrix.iterations;
  doc["as_expected"] = matrix.as_expected();
  doc["cells"] = ordered_json::array();
  for (const auto& cell : matrix.cells) {
    ordered_json row;
    row["campaign"] = cell.campaign;
    row["mutant"] = cell.mutant ? ordered_json(*cell.mutant) : ordered_json(nullptr);
    row["blind_spot"] = cell.blind_spot;
    row["expected_detected"] = cell.expected_detected;
    row["detected"] = cell.detected;
    row["iterations_run"] = cell.iterations_run;
    row["violations"] = cell.violations;
    row["execution_errors"] = cell.execution_errors;
    row["first_violation_iteration"] =
        cell.first_violation_iteration ? ordered_json(*cell.first_violation_iteration) : ordered_json(nullptr);
    doc["cells"].push_back(std::move(row));
  }
  return doc;
}

std::string format_report(const CampaignReport& report, ReportFormat format) {
  if (format == ReportFormat::json) {
    return to_json(report).dump(2) + "\n";
  }
  const auto& cx = report.counterexample;
  const auto& stats = report.statistics;
  std::string out = join_row({"schema_version", "campaign", "seed", "mutant", "iterations_run", "violations",
                              "first_violation_iteration", "counterexample_input",
                              "counterexample_output_original", "counterexample_output_variant",
                              "execution_errors", "statistics_k", "statistics_median_original",
                              "statistics_median_variant", "wall_time_ms"});
  out += join_row({
      std::string(report_schema_version),
      report.campaign,
      std::to_string(report.seed),
      optional_text(report.mutant),
      std::to_string(report.iterations_run),
      std::to_string(report.violations),
      optional_text(report.first_violation_iteration),
      cx ? csv_escape(cx->input) : "",
      cx ? csv_escape(cx->output_original) : "",
      cx ? csv_escape(cx->output_variant) : "",
      std::to_string(report.execution_errors),
      stats ? std::to_string(stats->repetitions) : "",
      stats ? number_text(stats->median_original) : "",
      stats ? number_text(stats->median_variant) : "",
      number_text(report.wall_time_ms),
  });
  return out;
}

std::string format_matrix(const DetectionMatrix& matrix, ReportFormat format) {
  if (format == ReportFormat::json) {
    return to_json(matrix).dump(2) + "\n";
  }
  std::string out = join_row({"campaign", "mutant", "blind_spot", "expected_detected", "detected",
                              "iterations_run", "violations", "execution_errors", "first_violation_iteration"});
  const auto flag = [](bool b) { return std::string(b ? "true" : "false"); };
  for (const auto& cell : matrix.cells) {
    out += join_row({
        cell.campaign,
        cell.mutant.value_or(""),
        flag(cell.blind_spot),
        flag(cell.expected_detected),
        flag(cell.detected),
        std::to_string(cell.iterations_run),
        std::to_string(cell.violations),
        std::to_string(cell.execution_errors),
        optional_text(cell.first_violation_iteration),
    });
  }
  return out;
}

} // namespace intramorph
