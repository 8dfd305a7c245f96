#pragma once

// Bounded random-testing campaigns: generate -> evaluate -> shrink -> report.
//
// Iteration i of a run seeded with s draws its input from
// SeededSource(split_seed(s, i)), so every iteration is reproducible on its
// own and first_violation_iteration does not depend on execution order.

#include "intramorph/budget.hpp"
#include "intramorph/core.hpp"
#include "intramorph/generators.hpp"
#include "intramorph/source.hpp"

#include <chrono>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <type_traits>
#include <vector>

namespace intramorph {

struct CampaignConfig {
  std::string campaign;
  std::uint64_t seed = 42;
  std::uint64_t iterations = 1;
  std::optional<std::string> mutant;
  /// Overrides k of a statistical relation.
  std::optional<unsigned> repetitions;
  /// Count every violation instead of stopping at the first.
  bool continue_after_violation = false;
  GeneratorConfig generators;
  ExecutionLimits limits;
};

struct Counterexample {
  std::string input;
  std::string output_original;
  std::string output_variant;
  std::string detail;
};

/// Per-side medians over all iterations of a statistical campaign.
struct StatisticalSummary {
  unsigned repetitions = 1;
  double median_original = 0.0;
  double median_variant = 0.0;
};

struct CampaignReport {
  std::string campaign;
  std::uint64_t seed = 0;
  std::optional<std::string> mutant;
  std::uint64_t iterations_run = 0;
  std::uint64_t violations = 0;
  std::optional<std::uint64_t> first_violation_iteration;
  std::optional<Counterexample> counterexample;
  std::uint64_t execution_errors = 0;
  std::optional<StatisticalSummary> statistics;
  double wall_time_ms = 0.0;
};

enum class Technique { unit, differential, metamorphic, intramorphic, equivalence };

constexpr std::string_view to_string(Technique t) {
  switch (t) {
  case Technique::unit: return "unit";
  case Technique::differential: return "differential";
  case Technique::metamorphic: return "metamorphic";
  case Technique::intramorphic: return "intramorphic";
  case Technique::equivalence: return "equivalence";
  }
  return "?";
}

struct CampaignInfo {
  std::string name;
  std::string case_study;
  Technique technique = Technique::intramorphic;
  std::string description;
  TransformationDescriptor descriptor;
  /// Relation is median-of-k over stochastic programs.
  bool stochastic = false;
  std::vector<MutantSpec> mutants;

  const MutantSpec* find_mutant(std::string_view name) const;
};

/// Result of replaying a run's shrunk counterexample.
struct CounterexampleCheck {
  bool found = false;
  bool reviolates = false;
  bool locally_minimal = false;
};

class Campaign {
public:
  virtual ~Campaign() = default;
  virtual const CampaignInfo& info() const = 0;
  /// Throws ConfigurationError for an invalid config; no partial report.
  virtual CampaignReport run(const CampaignConfig& config) const = 0;
  /// Runs `config`, then re-evaluates the shrunk counterexample and all of
  /// its shrink candidates with a freshly built oracle.
  virtual CounterexampleCheck verify_counterexample(const CampaignConfig& config) const = 0;
};

struct OracleOptions {
  std::optional<std::string> mutant;
  std::optional<unsigned> repetitions;
  ExecutionLimits limits;
};

template <class In, class Out>
using Oracle = std::function<RelationOutcome<Out>(const In&)>;

template <class In, class Out>
struct CampaignDefinition {
  CampaignInfo info;
  std::function<In(SeededSource&, const Provenance&, const GeneratorConfig&)> generate;
  /// Empty when inputs are not shrinkable.
  std::function<std::vector<In>(const In&)> shrink;
  std::function<Oracle<In, Out>(const OracleOptions&)> make_oracle;
  std::function<std::string(const In&)> render_input;
  std::function<std::string(const Out&)> render_output;
};

void validate_config(const CampaignInfo& info, const CampaignConfig& config);

namespace detail {
double middle_value(std::vector<double> values);
}

template <class In, class Out>
class TypedCampaign final : public Campaign {
public:
  struct Run {
    CampaignReport report;
    std::optional<In> shrunk_input;
    std::optional<RelationOutcome<Out>> shrunk_outcome;
  };

  explicit TypedCampaign(CampaignDefinition<In, Out> definition) : def_(std::move(definition)) {}

  const CampaignInfo& info() const override { return def_.info; }

  CampaignReport run(const CampaignConfig& config) const override { return run_detailed(config).report; }

  Run run_detailed(const CampaignConfig& config) const {
    validate_config(def_.info, config);
    const auto started = std::chrono::steady_clock::now();
    const auto oracle = def_.make_oracle(options(config));

    Run result;
    auto& report = result.report;
    report.campaign = def_.info.name;
    report.seed = config.seed;
    report.mutant = config.mutant;

    std::vector<double> originals;
    std::vector<double> variants;
    for (std::uint64_t iteration = 0; iteration < config.iterations; ++iteration) {
      const Provenance provenance{config.seed, iteration};
      SeededSource src(split_seed(config.seed, iteration));
      In input = def_.generate(src, provenance, config.generators);
      auto outcome = guarded(oracle, input, config.limits);
      ++report.iterations_run;
      if constexpr (std::is_floating_point_v<Out>) {
        if (outcome.original_output && outcome.variant_output) {
          originals.push_back(static_cast<double>(*outcome.original_output));
          variants.push_back(static_cast<double>(*outcome.variant_output));
        }
      }
      if (outcome.errored()) {
        ++report.execution_errors;
        continue;
      }
      if (!outcome.violated()) {
        continue;
      }
      ++report.violations;
      if (!report.first_violation_iteration) {
        report.first_violation_iteration = iteration;
        shrink_into(result, oracle, std::move(input), std::move(outcome), config.limits);
      }
      if (!config.continue_after_violation) {
        break;
      }
    }

    if (def_.info.stochastic && !originals.empty()) {
      report.statistics = StatisticalSummary{repetitions(config), detail::middle_value(std::move(originals)),
                                             detail::middle_value(std::move(variants))};
    }
    report.wall_time_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started).count();
    return result;
  }

  CounterexampleCheck verify_counterexample(const CampaignConfig& config) const override {
    const Run result = run_detailed(config);
    CounterexampleCheck check;
    if (!result.shrunk_input) {
      return check;
    }
    check.found = true;
    const auto oracle = def_.make_oracle(options(config));
    check.reviolates = guarded(oracle, *result.shrunk_input, config.limits).violated();
    check.locally_minimal = true;
    if (def_.shrink) {
      for (const auto& candidate : def_.shrink(*result.shrunk_input)) {
        if (guarded(oracle, candidate, config.limits).violated()) {
          check.locally_minimal = false;
          break;
        }
      }
    }
    return check;
  }

  /// Oracle for `config` as the campaign would build it.
  Oracle<In, Out> oracle(const CampaignConfig& config) const {
    validate_config(def_.info, config);
    return def_.make_oracle(options(config));
  }

  const CampaignDefinition<In, Out>& definition() const { return def_; }

private:
  static constexpr std::size_t max_shrink_steps = 10'000;

  OracleOptions options(const CampaignConfig& config) const {
    std::optional<unsigned> k;
    if (def_.info.stochastic) {
      k = repetitions(config);
    }
    return {config.mutant, k, config.limits};
  }

  unsigned repetitions(const CampaignConfig& config) const {
    return config.repetitions.value_or(config.generators.montecarlo.repetitions);
  }

  static RelationOutcome<Out> guarded(const Oracle<In, Out>& oracle, const In& input, ExecutionLimits limits) {
    try {
      BudgetScope scope(limits);
      return oracle(input);
    } catch (const ConfigurationError&) {
      throw;
    } catch (...) {
      return RelationOutcome<Out>::error(detail::describe_current_exception());
    }
  }

  // Greedy first-improvement: take the first candidate that still violates,
  // repeat until none does.
  void shrink_into(Run& result, const Oracle<In, Out>& oracle, In input, RelationOutcome<Out> outcome,
                   ExecutionLimits limits) const {
    if (def_.shrink) {
      for (std::size_t step = 0; step < max_shrink_steps; ++step) {
        bool improved = false;
        for (auto& candidate : def_.shrink(input)) {
          auto candidate_outcome = guarded(oracle, candidate, limits);
          if (candidate_outcome.violated()) {
            input = std::move(candidate);
            outcome = std::move(candidate_outcome);
            improved = true;
            break;
          }
        }
        if (!improved) {
          break;
        }
      }
    }
    Counterexample cx;
    cx.input = def_.render_input(input);
    cx.output_original = outcome.original_output ? def_.render_output(*outcome.original_output) : "";
    cx.output_variant = outcome.variant_output ? def_.render_output(*outcome.variant_output) : "";
    cx.detail = outcome.detail;
    result.report.counterexample = std::move(cx);
    result.shrunk_input = std::move(input);
    result.shrunk_outcome = std::move(outcome);
  }

  CampaignDefinition<In, Out> def_;
};

class CampaignRegistry {
public:
  /// Rejects duplicate names, duplicate mutant names, and campaigns whose
  /// statistical flag disagrees with descriptor.false_alarm_possible.
  void add(std::unique_ptr<Campaign> campaign);
  const Campaign* find(std::string_view name) const;
  /// Throws ConfigurationError for unknown names.
  const Campaign& get(std::string_view name) const;
  std::vector<const Campaign*> all() const;

private:
  std::vector<std::unique_ptr<Campaign>> campaigns_;
};

/// Every case-study campaign, in registration order.
const CampaignRegistry& builtin_campaigns();

CampaignReport run_campaign(const CampaignRegistry& registry, const CampaignConfig& config);
CampaignReport run_campaign(const CampaignConfig& config);

/// Violations needed, in percent of iterations run, to count a mutant as
/// detected by a statistical campaign.
inline constexpr unsigned stochastic_detection_percent = 95;

struct MatrixCell {
  std::string campaign;
  std::optional<std::string> mutant;
  bool blind_spot = false;
  bool expected_detected = false;
  bool detected = false;
  std::uint64_t iterations_run = 0;
  std::uint64_t violations = 0;
  std::uint64_t execution_errors = 0;
  std::optional<std::uint64_t> first_violation_iteration;
};

struct DetectionMatrix {
  std::uint64_t seed = 0;
  std::uint64_t iterations = 0;
  std::vector<MatrixCell> cells;

  /// Controls and blind spots undetected, every other mutant detected.
  bool as_expected() const;
};

bool is_detected(const CampaignInfo& info, const CampaignReport& report);

/// One run per cell: each campaign's unmutated control plus every listed
/// mutant from that campaign's catalogue. Deterministic campaigns stop at
/// the first violation; statistical ones count every iteration.
DetectionMatrix run_detection_matrix(const CampaignRegistry& registry, const std::vector<std::string>& campaigns,
                                     const std::vector<std::string>& mutants, std::uint64_t seed,
                                     std::uint64_t iterations);

/// All campaigns against their full catalogues.
DetectionMatrix run_detection_matrix(const CampaignRegistry& registry, std::uint64_t seed, std::uint64_t iterations);

} // namespace intramorph
