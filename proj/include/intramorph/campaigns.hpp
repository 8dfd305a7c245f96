#pragma once

// The registered case-study campaigns. Each definition can also be wrapped
// in a TypedCampaign directly for typed access to shrunk inputs.

#include "intramorph/ast.hpp"
#include "intramorph/baselines.hpp"
#include "intramorph/harness.hpp"
#include "intramorph/knapsack.hpp"
#include "intramorph/montecarlo.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace intramorph {

/// Input of the metamorphic campaign. The removed element is
/// sort(elements)[pick % size], so shrinking keeps the embedded choice.
struct RemovalInput {
  std::vector<int> elements;
  std::uint64_t pick = 0;
  friend bool operator==(const RemovalInput&, const RemovalInput&) = default;
};

std::string render(const std::vector<int>& values);
std::string render(const std::vector<std::string>& values);
std::string render(double value);
std::string render(const UnitCase& unit_case);
std::string render(const RemovalInput& input);

using IntList = std::vector<int>;

CampaignDefinition<UnitCase, IntList> sorting_unit_campaign();
CampaignDefinition<IntList, IntList> sorting_differential_campaign();
CampaignDefinition<RemovalInput, IntList> sorting_metamorphic_campaign();
CampaignDefinition<IntList, IntList> sorting_intramorphic_campaign();
CampaignDefinition<IntList, IntList> sorting_equivalence_campaign();
CampaignDefinition<Expr, std::vector<std::string>> ast_intramorphic_campaign();
CampaignDefinition<ConvergenceInput, double> montecarlo_convergence_campaign();
CampaignDefinition<KnapsackInstance, KnapsackSolution> knapsack_intramorphic_campaign();
CampaignDefinition<KnapsackInstance, KnapsackSolution> knapsack_approximation_campaign();

} // namespace intramorph
