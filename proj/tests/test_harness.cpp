#include "intramorph/campaigns.hpp"
#include "intramorph/harness.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace intramorph;

namespace {

CampaignConfig config(std::string campaign, std::uint64_t iterations, std::optional<std::string> mutant = {},
                      std::uint64_t seed = 42) {
  CampaignConfig c;
  c.campaign = std::move(campaign);
  c.iterations = iterations;
  c.mutant = std::move(mutant);
  c.seed = seed;
  return c;
}

} // namespace

TEST(Harness, RegistryHasEveryCaseStudy) {
  std::set<std::string> names;
  for (const auto* c : builtin_campaigns().all()) {
    names.insert(c->info().name);
    EXPECT_EQ(c->info().stochastic, c->info().descriptor.false_alarm_possible);
  }
  for (const char* expected : {"sorting-unit", "sorting-differential", "sorting-metamorphic", "sorting-intramorphic",
                               "sorting-equivalence", "ast-intramorphic", "montecarlo-convergence",
                               "knapsack-intramorphic", "knapsack-approximation"}) {
    EXPECT_TRUE(names.count(expected)) << expected;
  }
  EXPECT_THROW(builtin_campaigns().get("nope"), ConfigurationError);
  EXPECT_EQ(builtin_campaigns().find("nope"), nullptr);
}

TEST(Harness, RegistryRejectsDuplicates) {
  CampaignRegistry registry;
  registry.add(std::make_unique<TypedCampaign<IntList, IntList>>(sorting_intramorphic_campaign()));
  EXPECT_THROW(registry.add(std::make_unique<TypedCampaign<IntList, IntList>>(sorting_intramorphic_campaign())),
               ConfigurationError);
}

TEST(Harness, CleanRunHasNoViolations) {
  const auto r = run_campaign(config("sorting-intramorphic", 1000));
  EXPECT_EQ(r.violations, 0u);
  EXPECT_EQ(r.iterations_run, 1000u);
  EXPECT_FALSE(r.counterexample);
  EXPECT_FALSE(r.first_violation_iteration);
  EXPECT_FALSE(r.statistics);
}

TEST(Harness, SingleHoldingIteration) {
  const auto r = run_campaign(config("knapsack-intramorphic", 1));
  EXPECT_EQ(r.violations, 0u);
  EXPECT_EQ(r.iterations_run, 1u);
}

TEST(Harness, MutantIsFoundAndShrunkToThreeElements) {
  TypedCampaign<IntList, IntList> campaign(sorting_intramorphic_campaign());
  const auto run = campaign.run_detailed(config("sorting-intramorphic", 1000, "swap-index-i"));
  EXPECT_GE(run.report.violations, 1u);
  ASSERT_TRUE(run.shrunk_input);
  EXPECT_LE(run.shrunk_input->size(), 3u);
  EXPECT_EQ(run.report.counterexample->input, render(*run.shrunk_input));
  EXPECT_TRUE(run.shrunk_outcome->violated());
}

TEST(Harness, StopsAtFirstViolationUnlessContinuing) {
  auto cfg = config("sorting-intramorphic", 200, "swap-index-i");
  const auto first = run_campaign(cfg);
  EXPECT_EQ(first.violations, 1u);
  EXPECT_EQ(first.iterations_run, *first.first_violation_iteration + 1);
  cfg.continue_after_violation = true;
  const auto all = run_campaign(cfg);
  EXPECT_EQ(all.iterations_run, 200u);
  EXPECT_GT(all.violations, 1u);
  EXPECT_EQ(all.first_violation_iteration, first.first_violation_iteration);
  EXPECT_EQ(all.counterexample->input, first.counterexample->input);
}

TEST(Harness, ReportsReplayExactly) {
  for (const auto* c : builtin_campaigns().all()) {
    const auto& info = c->info();
    const auto mutant = info.mutants.empty() ? std::optional<std::string>{} : info.mutants.front().name;
    const auto cfg = config(info.name, info.stochastic ? 3 : 300, mutant, 7);
    const auto a = c->run(cfg);
    const auto b = c->run(cfg);
    EXPECT_EQ(a.violations, b.violations) << info.name;
    EXPECT_EQ(a.iterations_run, b.iterations_run) << info.name;
    EXPECT_EQ(a.first_violation_iteration, b.first_violation_iteration) << info.name;
    ASSERT_EQ(a.counterexample.has_value(), b.counterexample.has_value()) << info.name;
    if (a.counterexample) {
      EXPECT_EQ(a.counterexample->input, b.counterexample->input);
      EXPECT_EQ(a.counterexample->output_original, b.counterexample->output_original);
      EXPECT_EQ(a.counterexample->output_variant, b.counterexample->output_variant);
    }
  }
}

TEST(Harness, ShrunkCounterexamplesReviolateAndAreLocallyMinimal) {
  for (const auto* c : builtin_campaigns().all()) {
    const auto& info = c->info();
    for (const auto& m : info.mutants) {
      if (m.blind_spot || info.stochastic) {
        continue;
      }
      const auto check = c->verify_counterexample(config(info.name, 1000, m.name));
      EXPECT_TRUE(check.found) << info.name << "/" << m.name;
      EXPECT_TRUE(check.reviolates) << info.name << "/" << m.name;
      EXPECT_TRUE(check.locally_minimal) << info.name << "/" << m.name;
    }
  }
}

TEST(Harness, ConfigurationErrors) {
  EXPECT_THROW(run_campaign(config("nonexistent", 1)), ConfigurationError);
  EXPECT_THROW(run_campaign(config("sorting-intramorphic", 1, "nope")), ConfigurationError);
  EXPECT_THROW(run_campaign(config("sorting-intramorphic", 0)), ConfigurationError);
  // A mutant from another campaign's catalogue is not injectable here.
  EXPECT_THROW(run_campaign(config("sorting-unit", 1, "comparison-flip-reverse")), ConfigurationError);
  auto k = config("montecarlo-convergence", 1);
  k.repetitions = 4;
  EXPECT_THROW(run_campaign(k), ConfigurationError);
  k.repetitions = 0;
  EXPECT_THROW(run_campaign(k), ConfigurationError);
  auto det = config("sorting-intramorphic", 1);
  det.repetitions = 3;
  EXPECT_THROW(run_campaign(det), ConfigurationError);
}

TEST(Harness, StatisticalCampaignReportsMedians) {
  auto cfg = config("montecarlo-convergence", 5);
  cfg.repetitions = 3;
  const auto r = run_campaign(cfg);
  ASSERT_TRUE(r.statistics);
  EXPECT_EQ(r.statistics->repetitions, 3u);
  EXPECT_GT(r.statistics->median_original, r.statistics->median_variant);
  EXPECT_EQ(r.violations, 0u);
}

TEST(Harness, UnitCampaignCyclesFixedCases) {
  const auto r = run_campaign(config("sorting-unit", 10, "swap-index-i"));
  EXPECT_EQ(r.first_violation_iteration, 0u);
  EXPECT_EQ(r.counterexample->output_original, "[1, 2, 1]");
  EXPECT_EQ(r.counterexample->output_variant, "[1, 2, 3]");
}

TEST(Harness, OversizedInstancesAreExecutionErrors) {
  GeneratorConfig big;
  big.knapsack.capacity = {2'000'000, 2'000'000};
  big.knapsack.weights = {1, 1};
  auto cfg = config("knapsack-intramorphic", 3);
  cfg.generators = big;
  cfg.limits.timeout = std::chrono::milliseconds(50);
  const auto r = run_campaign(cfg);
  EXPECT_EQ(r.violations, 0u);
  EXPECT_GE(r.execution_errors, 1u);
}

TEST(Harness, MatrixControlsOnly) {
  const auto m = run_detection_matrix(builtin_campaigns(), {"sorting-intramorphic", "ast-intramorphic"}, {}, 42, 100);
  ASSERT_EQ(m.cells.size(), 2u);
  for (const auto& cell : m.cells) {
    EXPECT_FALSE(cell.mutant);
    EXPECT_FALSE(cell.detected);
  }
  EXPECT_TRUE(m.as_expected());
}

TEST(Harness, MatrixSelectedCells) {
  const auto m = run_detection_matrix(builtin_campaigns(), {"ast-intramorphic"},
                                      {"paren-left-as-right", "paren-missing"}, 42, 1000);
  ASSERT_EQ(m.cells.size(), 3u);
  EXPECT_TRUE(m.cells[1].detected);
  EXPECT_TRUE(m.cells[2].blind_spot);
  EXPECT_FALSE(m.cells[2].detected);
  EXPECT_TRUE(m.as_expected());
  EXPECT_THROW(run_detection_matrix(builtin_campaigns(), {"ast-intramorphic"}, {"swap-index-i"}, 42, 10),
               ConfigurationError);
  EXPECT_THROW(run_detection_matrix(builtin_campaigns(), {"nope"}, {}, 42, 10), ConfigurationError);
}

TEST(Harness, MiddleValue) {
  EXPECT_DOUBLE_EQ(detail::middle_value({3.0, 1.0, 2.0}), 2.0);
  EXPECT_DOUBLE_EQ(detail::middle_value({4.0, 1.0, 2.0, 3.0}), 2.5);
}
