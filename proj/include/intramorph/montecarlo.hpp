#pragma once

#include "intramorph/budget.hpp"
#include "intramorph/core.hpp"
#include "intramorph/source.hpp"

#include <concepts>
#include <cstdint>
#include <functional>
#include <numbers>
#include <string>
#include <string_view>
#include <vector>

namespace intramorph {

template <class S>
concept UnitSource = requires(S& s) {
  { s.next_unit() } -> std::convertible_to<double>;
};

enum class PiFault { none, wrong_scale, boundary_strict, one_coordinate };

/// Number of the n points (x, y) drawn from [0, 1)^2 that land in the
/// quarter disc.
template <UnitSource S>
std::uint64_t count_hits(std::uint64_t n, S& src, PiFault fault = PiFault::none) {
  std::uint64_t inside = 0;
  for (std::uint64_t i = 0; i < n; ++i) {
    budget_tick();
    const double x = src.next_unit();
    const double y = src.next_unit();
    bool hit;
    switch (fault) {
    case PiFault::boundary_strict: hit = x * x + y * y < 1.0; break;
    case PiFault::one_coordinate: hit = x * x <= 1.0; break;
    default: hit = x * x + y * y <= 1.0; break;
    }
    inside += hit ? 1 : 0;
  }
  return inside;
}

/// 4 * hits / n. n must be positive.
template <UnitSource S>
double pi_approximation(std::uint64_t n, S& src, PiFault fault = PiFault::none) {
  if (n == 0) {
    throw std::invalid_argument("pi_approximation: n must be positive");
  }
  const std::uint64_t hits = count_hits(n, src, fault);
  const double scale = fault == PiFault::wrong_scale ? 2.0 : 4.0;
  return scale * static_cast<double>(hits) / static_cast<double>(n);
}

using PiEstimator = std::function<double(std::uint64_t n, SeededSource& src)>;

PiEstimator reference_estimator();

/// Catalogue: wrong-scale, boundary-strict (blind spot), one-coordinate.
const std::vector<MutantSpec>& montecarlo_mutants();
PiEstimator inject_montecarlo_mutant(std::string_view name);

struct SampleBudgetPair {
  std::uint64_t n_small = 10;
  std::uint64_t n_large = 100'000;
  unsigned repetitions = 5;
  /// Throws ConfigurationError unless 0 < n_small < n_large and k is odd.
  void validate() const;
};

/// Input of the convergence pair: both sample counts plus the seeds of the
/// small-n and large-n estimators.
struct ConvergenceInput {
  std::uint64_t n_small = 10;
  std::uint64_t n_large = 100'000;
  std::uint64_t seed_small = 0;
  std::uint64_t seed_large = 0;
  friend bool operator==(const ConvergenceInput&, const ConvergenceInput&) = default;
};

/// Inputs for repetition `trial`; trial 0 is the input itself.
ConvergenceInput derive_trial(const ConvergenceInput& input, std::uint64_t trial);

/// original: |estimate(n_small) - pi|; variant: |estimate(n_large) - pi|.
/// The mutant, if any, replaces only the large-n side.
ProgramPair<ConvergenceInput, double> convergence_pair(PiEstimator large_side = reference_estimator());

/// error(n_small) >= error(n_large), median-of-k.
IntramorphicRelation<double> convergence_check(unsigned repetitions);

/// Draws the two seeds from `src` and evaluates the median-of-k relation.
RelationOutcome<double> convergence_relation(const SampleBudgetPair& budgets, SeededSource& src);

std::string render(const ConvergenceInput& input);

} // namespace intramorph
