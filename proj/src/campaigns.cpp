#include "intramorph/campaigns.hpp"

#include "intramorph/generators.hpp"
#include "intramorph/sorting.hpp"

#include <iomanip>
#include <sstream>

namespace intramorph {

namespace {

constexpr TransformationDescriptor descriptor(Granularity granularity, ApplicationMode mode, bool complete,
                                              bool false_alarms) {
  return {granularity, mode, Automation::manual, complete, false_alarms};
}

std::vector<MutantSpec> pick_mutants(const std::vector<MutantSpec>& catalog, std::initializer_list<std::string_view> names) {
  std::vector<MutantSpec> picked;
  for (const auto name : names) {
    for (const auto& mutant : catalog) {
      if (mutant.name == name) {
        picked.push_back(mutant);
      }
    }
  }
  return picked;
}

SortSuite suite_for(const OracleOptions& options) {
  return options.mutant ? inject_sorting_mutant(*options.mutant) : reference_sort_suite();
}

KnapsackSolvers solvers_for(const OracleOptions& options) {
  return options.mutant ? inject_knapsack_mutant(*options.mutant) : reference_knapsack_solvers();
}

IntList generate_array(SeededSource& src, const Provenance&, const GeneratorConfig& cfg) {
  return random_array(src, cfg);
}

std::vector<IntList> shrink_array(const IntList& arr) { return shrink(arr); }

std::string render_ints(const IntList& values) { return render(values); }

// Relation plus the solution invariants of both sides.
Oracle<KnapsackInstance, KnapsackSolution> knapsack_oracle(const OracleOptions& options,
                                                           IntramorphicRelation<KnapsackSolution> relation) {
  return [pair = greedy_exhaustive_pair(solvers_for(options)), relation = std::move(relation),
          limits = options.limits](const KnapsackInstance& instance) {
    auto outcome = evaluate_pair(pair, relation, instance, limits);
    if (!outcome.holds()) {
      return outcome;
    }
    if (!is_feasible(instance, *outcome.original_output)) {
      outcome.status = Status::violated;
      outcome.detail = "greedy solution breaks the feasibility invariants";
    } else if (!is_feasible(instance, *outcome.variant_output)) {
      outcome.status = Status::violated;
      outcome.detail = "exhaustive solution breaks the feasibility invariants";
    }
    return outcome;
  };
}

CampaignDefinition<KnapsackInstance, KnapsackSolution>
knapsack_campaign(std::string name, std::string description, std::vector<MutantSpec> mutants,
                  IntramorphicRelation<KnapsackSolution> (*relation)()) {
  return {
      {std::move(name), "knapsack", Technique::intramorphic, std::move(description),
       descriptor(Granularity::algorithm_replaced, ApplicationMode::added_alongside, true, false), false,
       std::move(mutants)},
      [](SeededSource& src, const Provenance&, const GeneratorConfig& cfg) {
        return random_knapsack_instance(src, cfg);
      },
      [](const KnapsackInstance& instance) { return shrink(instance); },
      [relation](const OracleOptions& options) { return knapsack_oracle(options, relation()); },
      [](const KnapsackInstance& instance) { return render(instance); },
      [](const KnapsackSolution& solution) { return render(solution); },
  };
}

} // namespace

std::string render(const std::vector<int>& values) {
  std::string out = "[";
  for (std::size_t i = 0; i < values.size(); ++i) {
    out += (i ? ", " : "") + std::to_string(values[i]);
  }
  return out + "]";
}

std::string render(const std::vector<std::string>& values) {
  std::string out = "[";
  for (std::size_t i = 0; i < values.size(); ++i) {
    out += (i ? ", \"" : "\"") + values[i] + "\"";
  }
  return out + "]";
}

std::string render(double value) {
  std::ostringstream out;
  out << std::setprecision(17) << value;
  return out.str();
}

std::string render(const UnitCase& unit_case) {
  return render(unit_case.input) + " -> " + render(unit_case.expected);
}

std::string render(const RemovalInput& input) {
  return render(input.elements) + " pick=" + std::to_string(input.pick);
}

CampaignDefinition<UnitCase, IntList> sorting_unit_campaign() {
  return {
      {"sorting-unit", "sorting", Technique::unit, "bubble_sort against hand-written expected outputs",
       descriptor(Granularity::function_added, ApplicationMode::added_alongside, false, false), false,
       pick_mutants(sorting_mutants(), {"swap-index-i"})},
      [](SeededSource&, const Provenance& provenance, const GeneratorConfig&) {
        const auto& cases = default_unit_cases();
        return cases[provenance.iteration % cases.size()];
      },
      nullptr,
      [](const OracleOptions& options) -> Oracle<UnitCase, IntList> {
        return [sort = suite_for(options).bubble_sort](const UnitCase& c) { return unit_oracle(sort, c); };
      },
      [](const UnitCase& c) { return render(c); },
      render_ints,
  };
}

CampaignDefinition<IntList, IntList> sorting_differential_campaign() {
  return {
      {"sorting-differential", "sorting", Technique::differential,
       "bubble_sort, merge_sort and insertion_sort must agree",
       descriptor(Granularity::algorithm_replaced, ApplicationMode::added_alongside, true, false), false,
       pick_mutants(sorting_mutants(), {"swap-index-i"})},
      generate_array,
      shrink_array,
      [](const OracleOptions& options) -> Oracle<IntList, IntList> {
        std::vector<SortFn> algorithms{suite_for(options).bubble_sort, merge_sort, insertion_sort};
        return [algorithms = std::move(algorithms)](const IntList& arr) { return differential_oracle(algorithms, arr); };
      },
      render_ints,
      render_ints,
  };
}

CampaignDefinition<RemovalInput, IntList> sorting_metamorphic_campaign() {
  return {
      {"sorting-metamorphic", "sorting", Technique::metamorphic,
       "removing one element from the input removes it from the sorted output",
       descriptor(Granularity::function_added, ApplicationMode::added_alongside, true, false), false,
       pick_mutants(sorting_mutants(), {"swap-index-i"})},
      [](SeededSource& src, const Provenance&, const GeneratorConfig& cfg) {
        RemovalInput input;
        input.elements = random_array(src, cfg);
        input.pick = src.next_u64();
        return input;
      },
      [](const RemovalInput& input) {
        std::vector<RemovalInput> candidates;
        for (auto& elements : shrink(input.elements)) {
          candidates.push_back({std::move(elements), input.pick});
        }
        return candidates;
      },
      [](const OracleOptions& options) -> Oracle<RemovalInput, IntList> {
        return [sort = suite_for(options).bubble_sort](const RemovalInput& input) {
          // Empty arrays have nothing to remove.
          if (input.elements.empty()) {
            return RelationOutcome<IntList>::checked(true, {}, {});
          }
          return metamorphic_removal_oracle(sort, input.elements, input.pick % input.elements.size());
        };
      },
      [](const RemovalInput& input) { return render(input); },
      render_ints,
  };
}

CampaignDefinition<IntList, IntList> sorting_intramorphic_campaign() {
  return {
      {"sorting-intramorphic", "sorting", Technique::intramorphic,
       "bubble_sort_reverse added alongside bubble_sort; reversed outputs must match",
       reverse_sort_pair().descriptor, false, sorting_mutants()},
      generate_array,
      shrink_array,
      [](const OracleOptions& options) -> Oracle<IntList, IntList> {
        return [pair = reverse_sort_pair(suite_for(options)), relation = reverse_sort_relation(),
                limits = options.limits](const IntList& arr) { return evaluate_pair(pair, relation, arr, limits); };
      },
      render_ints,
      render_ints,
  };
}

CampaignDefinition<IntList, IntList> sorting_equivalence_campaign() {
  return {
      {"sorting-equivalence", "sorting", Technique::equivalence,
       "bubble_sort replaced by merge_sort; outputs must be identical",
       descriptor(Granularity::algorithm_replaced, ApplicationMode::added_alongside, true, false), false,
       pick_mutants(sorting_mutants(), {"swap-index-i"})},
      generate_array,
      shrink_array,
      [](const OracleOptions& options) -> Oracle<IntList, IntList> {
        ProgramPair<IntList, IntList> pair{suite_for(options).bubble_sort, merge_sort,
                                           descriptor(Granularity::algorithm_replaced,
                                                      ApplicationMode::added_alongside, true, false)};
        return [pair = std::move(pair), relation = equivalence_relation<IntList>(),
                limits = options.limits](const IntList& arr) { return evaluate_pair(pair, relation, arr, limits); };
      },
      render_ints,
      render_ints,
  };
}

CampaignDefinition<Expr, std::vector<std::string>> ast_intramorphic_campaign() {
  using Renderings = std::vector<std::string>;
  return {
      {"ast-intramorphic", "ast", Technique::intramorphic,
       "prefix and postfix printers added alongside infix; all three print the same tokens",
       printer_pair().descriptor, false, ast_mutants()},
      [](SeededSource& src, const Provenance&, const GeneratorConfig& cfg) { return random_tree(src, cfg); },
      [](const Expr& tree) { return shrink(tree); },
      [](const OracleOptions& options) -> Oracle<Expr, Renderings> {
        InfixPrinter printer = options.mutant ? inject_ast_mutant(*options.mutant) : InfixPrinter(as_string_infix);
        return [pair = printer_pair(std::move(printer)), relation = token_relation(),
                limits = options.limits](const Expr& tree) { return evaluate_pair(pair, relation, tree, limits); };
      },
      [](const Expr& tree) { return as_string_infix(tree) + "  " + render(tree); },
      [](const Renderings& renderings) { return render(renderings); },
  };
}

CampaignDefinition<ConvergenceInput, double> montecarlo_convergence_campaign() {
  return {
      {"montecarlo-convergence", "montecarlo", Technique::intramorphic,
       "sample count made a parameter; error with few samples >= error with many (median of k)",
       convergence_pair().descriptor, true, montecarlo_mutants()},
      [](SeededSource& src, const Provenance&, const GeneratorConfig& cfg) {
        return random_convergence_input(src, cfg);
      },
      nullptr,
      [](const OracleOptions& options) -> Oracle<ConvergenceInput, double> {
        PiEstimator large = options.mutant ? inject_montecarlo_mutant(*options.mutant) : reference_estimator();
        return [pair = convergence_pair(std::move(large)), repetitions = options.repetitions,
                limits = options.limits](const ConvergenceInput& input) {
          return evaluate_pair(pair, convergence_check(repetitions.value_or(SampleBudgetPair{}.repetitions)), input,
                               limits);
        };
      },
      [](const ConvergenceInput& input) { return render(input); },
      [](const double& error) { return render(error); },
  };
}

CampaignDefinition<KnapsackInstance, KnapsackSolution> knapsack_intramorphic_campaign() {
  return knapsack_campaign("knapsack-intramorphic",
                           "greedy replaced by exhaustive search; exhaustive value >= greedy value",
                           pick_mutants(knapsack_mutants(), {"exhaustive-skip-include", "greedy-capacity-off-by-one"}),
                           &optimality_check);
}

CampaignDefinition<KnapsackInstance, KnapsackSolution> knapsack_approximation_campaign() {
  return knapsack_campaign("knapsack-approximation",
                           "greedy replaced by exhaustive search; greedy >= exhaustive / 2 and exhaustive >= greedy",
                           knapsack_mutants(), &approximation_check);
}

const CampaignRegistry& builtin_campaigns() {
  static const CampaignRegistry registry = [] {
    CampaignRegistry r;
    r.add(std::make_unique<TypedCampaign<UnitCase, IntList>>(sorting_unit_campaign()));
    r.add(std::make_unique<TypedCampaign<IntList, IntList>>(sorting_differential_campaign()));
    r.add(std::make_unique<TypedCampaign<RemovalInput, IntList>>(sorting_metamorphic_campaign()));
    r.add(std::make_unique<TypedCampaign<IntList, IntList>>(sorting_intramorphic_campaign()));
    r.add(std::make_unique<TypedCampaign<IntList, IntList>>(sorting_equivalence_campaign()));
    r.add(std::make_unique<TypedCampaign<Expr, std::vector<std::string>>>(ast_intramorphic_campaign()));
    r.add(std::make_unique<TypedCampaign<ConvergenceInput, double>>(montecarlo_convergence_campaign()));
    r.add(std::make_unique<TypedCampaign<KnapsackInstance, KnapsackSolution>>(knapsack_intramorphic_campaign()));
    r.add(std::make_unique<TypedCampaign<KnapsackInstance, KnapsackSolution>>(knapsack_approximation_campaign()));
    return r;
  }();
  return registry;
}

} // namespace intramorph
