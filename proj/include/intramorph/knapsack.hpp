#pragma once

#include "intramorph/core.hpp"

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace intramorph {

struct KnapsackItem {
  std::string name;
  std::int64_t value = 1;
  std::int64_t weight = 1;
  friend bool operator==(const KnapsackItem&, const KnapsackItem&) = default;
};

/// Unbounded knapsack: any number of copies of each item may be packed.
struct KnapsackInstance {
  std::vector<KnapsackItem> items;
  std::int64_t capacity = 0;

  /// Weights >= 1, values >= 1, names unique, capacity >= 0.
  void validate() const;
  friend bool operator==(const KnapsackInstance&, const KnapsackInstance&) = default;
};

struct KnapsackSolution {
  /// Packed item names; repeats are copies.
  std::vector<std::string> packed;
  std::int64_t cum_value = 0;
  std::int64_t cum_weight = 0;
  friend bool operator==(const KnapsackSolution&, const KnapsackSolution&) = default;
};

class SearchBudgetExceeded : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Admission bound for the exhaustive search:
/// items * ceil(capacity / min_weight) <= max_exhaustive_branches.
inline constexpr std::uint64_t max_exhaustive_branches = 1'000'000;
/// Largest capacity the DP table accepts.
inline constexpr std::int64_t max_dp_capacity = 10'000'000;

/// Items by non-increasing value/weight (exact rational order, ties keep
/// input order); each item is added while it still fits.
KnapsackSolution knapsack_greedy(KnapsackInstance instance);

/// Include/exclude recursion over items; the include branch stays on the
/// same item so copies are explored. Throws SearchBudgetExceeded when the
/// admission bound is exceeded.
KnapsackSolution knapsack_exhaustive(const KnapsackInstance& instance);

/// best[c] = max over items with w <= c of value + best[c - w].
std::int64_t dp_reference(const KnapsackInstance& instance);

/// exhaustive value >= greedy value.
bool optimality_relation(const KnapsackSolution& exhaustive, const KnapsackSolution& greedy);

/// Unbounded greedy by density packs at least floor(C / w) >= 1 copies of
/// the densest fitting item, so 2 * greedy >= optimum.
bool approximation_relation(const KnapsackSolution& exhaustive, const KnapsackSolution& greedy);

/// cum_weight <= capacity and both sums agree with the packed names.
bool is_feasible(const KnapsackInstance& instance, const KnapsackSolution& solution);

struct KnapsackSolvers {
  std::function<KnapsackSolution(KnapsackInstance)> greedy;
  std::function<KnapsackSolution(KnapsackInstance)> exhaustive;
};

KnapsackSolvers reference_knapsack_solvers();

/// Catalogue: greedy-sort-ascending, exhaustive-skip-include,
/// greedy-capacity-off-by-one.
const std::vector<MutantSpec>& knapsack_mutants();
KnapsackSolvers inject_knapsack_mutant(std::string_view name);

/// original: greedy; variant: exhaustive.
ProgramPair<KnapsackInstance, KnapsackSolution>
greedy_exhaustive_pair(const KnapsackSolvers& solvers = reference_knapsack_solvers());

/// Relations over (greedy, exhaustive) outputs, in ProgramPair order.
IntramorphicRelation<KnapsackSolution> optimality_check();
IntramorphicRelation<KnapsackSolution> approximation_check();

std::string render(const KnapsackInstance& instance);
std::string render(const KnapsackSolution& solution);

} // namespace intramorph
