#include "intramorph/harness.hpp"

#include <algorithm>
#include <set>

namespace intramorph {

const MutantSpec* CampaignInfo::find_mutant(std::string_view mutant_name) const {
  const auto it = std::find_if(mutants.begin(), mutants.end(),
                               [&](const MutantSpec& m) { return m.name == mutant_name; });
  return it == mutants.end() ? nullptr : &*it;
}

void validate_config(const CampaignInfo& info, const CampaignConfig& config) {
  if (config.iterations == 0) {
    throw ConfigurationError("iterations must be at least 1");
  }
  if (config.mutant && info.find_mutant(*config.mutant) == nullptr) {
    throw ConfigurationError("campaign '" + info.name + "' has no mutant '" + *config.mutant + "'");
  }
  if (config.repetitions) {
    if (!info.stochastic) {
      throw ConfigurationError("campaign '" + info.name + "' is deterministic; repetitions do not apply");
    }
    validate_repetitions(*config.repetitions);
  }
  config.generators.validate();
}

namespace detail {

double middle_value(std::vector<double> values) {
  if (values.empty()) {
    return 0.0;
  }
  std::sort(values.begin(), values.end());
  const std::size_t mid = values.size() / 2;
  return values.size() % 2 == 1 ? values[mid] : (values[mid - 1] + values[mid]) / 2.0;
}

} // namespace detail

void CampaignRegistry::add(std::unique_ptr<Campaign> campaign) {
  const auto& info = campaign->info();
  if (find(info.name) != nullptr) {
    throw ConfigurationError("campaign '" + info.name + "' registered twice");
  }
  if (info.stochastic != info.descriptor.false_alarm_possible) {
    throw ConfigurationError("campaign '" + info.name +
                             "': statistical relations are required exactly when false alarms are possible");
  }
  std::set<std::string> names;
  for (const auto& mutant : info.mutants) {
    if (!names.insert(mutant.name).second) {
      throw ConfigurationError("campaign '" + info.name + "' lists mutant '" + mutant.name + "' twice");
    }
  }
  campaigns_.push_back(std::move(campaign));
}

const Campaign* CampaignRegistry::find(std::string_view name) const {
  for (const auto& campaign : campaigns_) {
    if (campaign->info().name == name) {
      return campaign.get();
    }
  }
  return nullptr;
}

const Campaign& CampaignRegistry::get(std::string_view name) const {
  if (const auto* campaign = find(name)) {
    return *campaign;
  }
  throw ConfigurationError("unknown campaign: " + std::string(name));
}

std::vector<const Campaign*> CampaignRegistry::all() const {
  std::vector<const Campaign*> result;
  result.reserve(campaigns_.size());
  for (const auto& campaign : campaigns_) {
    result.push_back(campaign.get());
  }
  return result;
}

CampaignReport run_campaign(const CampaignRegistry& registry, const CampaignConfig& config) {
  return registry.get(config.campaign).run(config);
}

CampaignReport run_campaign(const CampaignConfig& config) { return run_campaign(builtin_campaigns(), config); }

bool is_detected(const CampaignInfo& info, const CampaignReport& report) {
  if (info.stochastic) {
    return report.iterations_run > 0 &&
           report.violations * 100 >= static_cast<std::uint64_t>(stochastic_detection_percent) * report.iterations_run;
  }
  return report.violations > 0;
}

bool DetectionMatrix::as_expected() const {
  return std::all_of(cells.begin(), cells.end(),
                     [](const MatrixCell& cell) { return cell.detected == cell.expected_detected; });
}

namespace {

MatrixCell run_cell(const Campaign& campaign, const std::optional<std::string>& mutant, std::uint64_t seed,
                    std::uint64_t iterations) {
  const auto& info = campaign.info();
  CampaignConfig config;
  config.campaign = info.name;
  config.seed = seed;
  config.iterations = iterations;
  config.mutant = mutant;
  config.continue_after_violation = info.stochastic;
  const CampaignReport report = campaign.run(config);

  MatrixCell cell;
  cell.campaign = info.name;
  cell.mutant = mutant;
  if (mutant) {
    cell.blind_spot = info.find_mutant(*mutant)->blind_spot;
    cell.expected_detected = !cell.blind_spot;
  }
  cell.detected = is_detected(info, report);
  cell.iterations_run = report.iterations_run;
  cell.violations = report.violations;
  cell.execution_errors = report.execution_errors;
  cell.first_violation_iteration = report.first_violation_iteration;
  return cell;
}

} // namespace

DetectionMatrix run_detection_matrix(const CampaignRegistry& registry, const std::vector<std::string>& campaigns,
                                     const std::vector<std::string>& mutants, std::uint64_t seed,
                                     std::uint64_t iterations) {
  if (iterations == 0) {
    throw ConfigurationError("iterations must be at least 1");
  }
  std::vector<const Campaign*> selected;
  for (const auto& name : campaigns) {
    selected.push_back(&registry.get(name));
  }
  for (const auto& mutant : mutants) {
    const bool known = std::any_of(selected.begin(), selected.end(),
                                   [&](const Campaign* c) { return c->info().find_mutant(mutant) != nullptr; });
    if (!known) {
      throw ConfigurationError("no selected campaign catalogues mutant '" + mutant + "'");
    }
  }

  DetectionMatrix matrix;
  matrix.seed = seed;
  matrix.iterations = iterations;
  for (const Campaign* campaign : selected) {
    matrix.cells.push_back(run_cell(*campaign, std::nullopt, seed, iterations));
    for (const auto& mutant : mutants) {
      if (campaign->info().find_mutant(mutant) != nullptr) {
        matrix.cells.push_back(run_cell(*campaign, mutant, seed, iterations));
      }
    }
  }
  return matrix;
}

DetectionMatrix run_detection_matrix(const CampaignRegistry& registry, std::uint64_t seed, std::uint64_t iterations) {
  std::vector<std::string> campaigns;
  std::vector<std::string> mutants;
  for (const Campaign* campaign : registry.all()) {
    campaigns.push_back(campaign->info().name);
    for (const auto& mutant : campaign->info().mutants) {
      if (std::find(mutants.begin(), mutants.end(), mutant.name) == mutants.end()) {
        mutants.push_back(mutant.name);
      }
    }
  }
  return run_detection_matrix(registry, campaigns, mutants, seed, iterations);
}

} // namespace intramorph
