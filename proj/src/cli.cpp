#include "intramorph/cli.hpp"

#include "intramorph/harness.hpp"
#include "intramorph/report.hpp"

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <ostream>

#include <CLI11.hpp>

namespace intramorph {

namespace {

constexpr std::uint64_t fallback_seed = 42;

std::uint64_t default_seed() {
  const char* env = std::getenv("INTRAMORPH_SEED");
  if (env == nullptr || *env == '\0') {
    return fallback_seed;
  }
  std::size_t used = 0;
  std::uint64_t value = 0;
  try {
    value = std::stoull(env, &used, 10);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || env[used] != '\0' || env[0] == '-') {
    throw ConfigurationError(std::string("INTRAMORPH_SEED is not an unsigned integer: ") + env);
  }
  return value;
}

// Writes to `path`, or to `out` when the path is empty or "-".
void emit(const std::string& document, const std::string& path, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << document << std::flush;
    if (!out) {
      throw std::runtime_error("failed writing report to stdout");
    }
    return;
  }
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) {
    throw std::runtime_error("cannot open report file: " + path);
  }
  file << document;
  file.close();
  if (!file) {
    throw std::runtime_error("failed writing report file: " + path);
  }
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

void print_campaigns(std::ostream& out) {
  out << std::left << std::setw(24) << "campaign" << std::setw(14) << "technique" << std::setw(20) << "granularity"
      << std::setw(19) << "mode" << std::setw(12) << "automation" << std::setw(10) << "complete"
      << "false-alarms\n";
  for (const Campaign* campaign : builtin_campaigns().all()) {
    const auto& info = campaign->info();
    const auto& d = info.descriptor;
    out << std::setw(24) << info.name << std::setw(14) << to_string(info.technique) << std::setw(20)
        << to_string(d.granularity) << std::setw(19) << to_string(d.application_mode) << std::setw(12)
        << to_string(d.automation) << std::setw(10) << yes_no(d.relation_complete)
        << yes_no(d.false_alarm_possible) << "\n";
  }
}

void print_mutants(const std::string& name, std::ostream& out) {
  const auto& info = builtin_campaigns().get(name).info();
  for (const auto& mutant : info.mutants) {
    out << mutant.name << (mutant.blind_spot ? " [blind spot]" : "") << ": " << mutant.description << "\n";
  }
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Random testing campaigns with intramorphic, unit, differential and metamorphic oracles",
               "intramorph"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for every subcommand");

  auto* list_cmd = app.add_subcommand("list", "List campaigns and their transformation descriptors");

  std::string mutants_campaign;
  auto* mutants_cmd = app.add_subcommand("mutants", "List the mutant catalogue of a campaign");
  mutants_cmd->add_option("--campaign", mutants_campaign, "Campaign name")->required();

  CampaignConfig run_config;
  std::optional<std::uint64_t> run_seed;
  std::optional<std::string> run_mutant;
  std::optional<unsigned> run_k;
  std::string run_report;
  std::string run_format = "json";
  auto* run_cmd = app.add_subcommand("run", "Run one campaign");
  run_cmd->add_option("--campaign", run_config.campaign, "Campaign name")->required();
  run_cmd->add_option("--mutant", run_mutant, "Inject a catalogued mutant");
  run_cmd->add_option("--seed", run_seed, "Seed (default: $INTRAMORPH_SEED, else 42)");
  run_cmd->add_option("--iterations", run_config.iterations, "Generated inputs to evaluate")
      ->check(CLI::PositiveNumber);
  run_cmd->add_option("--report", run_report, "Report path (default: stdout)");
  run_cmd->add_option("--format", run_format, "Report format")->check(CLI::IsMember({"json", "csv"}));
  run_cmd->add_option("--k", run_k, "Repetitions of a statistical relation (odd)");
  run_cmd->add_flag("--continue", run_config.continue_after_violation, "Count every violation");

  std::optional<std::uint64_t> matrix_seed;
  std::uint64_t matrix_iterations = 1000;
  std::string matrix_report;
  std::string matrix_format = "csv";
  auto* matrix_cmd = app.add_subcommand("matrix", "Run every campaign against its mutant catalogue");
  matrix_cmd->add_option("--seed", matrix_seed, "Seed (default: $INTRAMORPH_SEED, else 42)");
  matrix_cmd->add_option("--iterations", matrix_iterations, "Iterations per cell")->check(CLI::PositiveNumber);
  matrix_cmd->add_option("--report", matrix_report, "Report path (default: stdout)");
  matrix_cmd->add_option("--format", matrix_format, "Report format")->check(CLI::IsMember({"json", "csv"}));

  std::vector<const char*> argv{"intramorph"};
  for (const auto& arg : args) {
    argv.push_back(arg.c_str());
  }

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::Success& e) {
    app.exit(e, out, err);
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    err << "intramorph: " << e.what() << "\n";
    return exit_usage;
  }

  try {
    if (list_cmd->parsed()) {
      print_campaigns(out);
      return exit_ok;
    }
    if (mutants_cmd->parsed()) {
      print_mutants(mutants_campaign, out);
      return exit_ok;
    }
    if (run_cmd->parsed()) {
      run_config.seed = run_seed ? *run_seed : default_seed();
      run_config.mutant = run_mutant;
      run_config.repetitions = run_k;
      const auto report = run_campaign(run_config);
      emit(format_report(report, parse_report_format(run_format)), run_report, out);
      return report.violations > 0 ? exit_violation : exit_ok;
    }
    if (matrix_cmd->parsed()) {
      const auto seed = matrix_seed ? *matrix_seed : default_seed();
      const auto matrix = run_detection_matrix(builtin_campaigns(), seed, matrix_iterations);
      emit(format_matrix(matrix, parse_report_format(matrix_format)), matrix_report, out);
      return matrix.as_expected() ? exit_ok : exit_violation;
    }
  } catch (const std::exception& e) {
    err << "intramorph: " << e.what() << "\n";
    return exit_usage;
  }
  return exit_usage;
}

} // namespace intramorph
