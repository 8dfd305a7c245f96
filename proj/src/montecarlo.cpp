#include "intramorph/montecarlo.hpp"

#include <cmath>

namespace intramorph {

namespace {

PiEstimator estimator(PiFault fault) {
  return [fault](std::uint64_t n, SeededSource& src) { return pi_approximation(n, src, fault); };
}

double absolute_error(const PiEstimator& estimate, std::uint64_t n, std::uint64_t seed) {
  SeededSource src(seed);
  return std::abs(estimate(n, src) - std::numbers::pi);
}

} // namespace

PiEstimator reference_estimator() { return estimator(PiFault::none); }

const std::vector<MutantSpec>& montecarlo_mutants() {
  static const std::vector<MutantSpec> catalog{
      {"wrong-scale", "estimate is 2 * hits / n", false},
      {"boundary-strict", "hit test uses x^2 + y^2 < 1 (the boundary has probability ~0)", true},
      {"one-coordinate", "hit test checks x^2 <= 1 only, estimate tends to 4", false},
  };
  return catalog;
}

PiEstimator inject_montecarlo_mutant(std::string_view name) {
  if (name == "wrong-scale") {
    return estimator(PiFault::wrong_scale);
  }
  if (name == "boundary-strict") {
    return estimator(PiFault::boundary_strict);
  }
  if (name == "one-coordinate") {
    return estimator(PiFault::one_coordinate);
  }
  throw ConfigurationError("unknown montecarlo mutant: " + std::string(name));
}

void SampleBudgetPair::validate() const {
  if (n_small == 0 || n_small >= n_large) {
    throw ConfigurationError("sample budgets need 0 < n_small < n_large");
  }
  validate_repetitions(repetitions);
}

ConvergenceInput derive_trial(const ConvergenceInput& input, std::uint64_t trial) {
  if (trial == 0) {
    return input;
  }
  ConvergenceInput derived = input;
  derived.seed_small = split_seed(input.seed_small, trial);
  derived.seed_large = split_seed(input.seed_large, trial);
  return derived;
}

ProgramPair<ConvergenceInput, double> convergence_pair(PiEstimator large_side) {
  const PiEstimator small_side = reference_estimator();
  return {
      [small_side](ConvergenceInput in) { return absolute_error(small_side, in.n_small, in.seed_small); },
      [large_side = std::move(large_side)](ConvergenceInput in) {
        return absolute_error(large_side, in.n_large, in.seed_large);
      },
      {Granularity::parameter_added, ApplicationMode::in_place_modified, Automation::manual, true, true},
  };
}

IntramorphicRelation<double> convergence_check(unsigned repetitions) {
  validate_repetitions(repetitions);
  return {[](const double& inaccurate, const double& accurate) { return inaccurate >= accurate; },
          StatisticalConfig{repetitions}};
}

RelationOutcome<double> convergence_relation(const SampleBudgetPair& budgets, SeededSource& src) {
  budgets.validate();
  ConvergenceInput input{budgets.n_small, budgets.n_large, 0, 0};
  input.seed_small = src.next_u64();
  input.seed_large = src.next_u64();
  return evaluate_pair(convergence_pair(), convergence_check(budgets.repetitions), input);
}

std::string render(const ConvergenceInput& input) {
  return "n_small=" + std::to_string(input.n_small) + " n_large=" + std::to_string(input.n_large) +
         " seed_small=" + std::to_string(input.seed_small) + " seed_large=" + std::to_string(input.seed_large);
}

} // namespace intramorph
