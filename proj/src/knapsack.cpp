#include "intramorph/knapsack.hpp"

#include "intramorph/budget.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <sstream>

namespace intramorph {

namespace {

enum class DensityOrder { descending, ascending };

struct GreedyOptions {
  DensityOrder order = DensityOrder::descending;
  std::int64_t capacity_slack = 0;
};

// a.value / a.weight > b.value / b.weight, without division.
bool denser(const KnapsackItem& a, const KnapsackItem& b) {
  return a.value * b.weight > b.value * a.weight;
}

KnapsackSolution greedy(KnapsackInstance instance, GreedyOptions options) {
  instance.validate();
  auto& objects = instance.items;
  if (options.order == DensityOrder::descending) {
    std::stable_sort(objects.begin(), objects.end(), denser);
  } else {
    std::stable_sort(objects.begin(), objects.end(),
                     [](const KnapsackItem& a, const KnapsackItem& b) { return denser(b, a); });
  }
  KnapsackSolution solution;
  for (const auto& [name, value, weight] : objects) {
    while (solution.cum_weight + weight <= instance.capacity + options.capacity_slack) {
      budget_tick();
      solution.cum_weight += weight;
      solution.cum_value += value;
      solution.packed.push_back(name);
    }
  }
  return solution;
}

class ExhaustiveSearch {
public:
  ExhaustiveSearch(const std::vector<KnapsackItem>& objects, bool explore_include)
      : objects_(objects), explore_include_(explore_include) {}

  KnapsackSolution run(std::int64_t capacity) {
    packed_.clear();
    return recurse(capacity, 0, 0, 0);
  }

private:
  KnapsackSolution recurse(std::int64_t capacity, std::size_t item_index, std::int64_t cum_value,
                           std::int64_t cum_weight) {
    budget_tick();
    if (capacity <= 0 || item_index >= objects_.size()) {
      return {packed_, cum_value, cum_weight};
    }
    const auto& [name, value, weight] = objects_[item_index];
    std::optional<KnapsackSolution> included;
    if (explore_include_ && weight <= capacity) {
      packed_.push_back(name);
      included = recurse(capacity - weight, item_index, cum_value + value, cum_weight + weight);
      packed_.pop_back();
    }
    KnapsackSolution excluded = recurse(capacity, item_index + 1, cum_value, cum_weight);
    // Ties go to the exclude branch.
    if (included && included->cum_value > excluded.cum_value) {
      return std::move(*included);
    }
    return excluded;
  }

  const std::vector<KnapsackItem>& objects_;
  bool explore_include_;
  std::vector<std::string> packed_;
};

KnapsackSolution exhaustive(const KnapsackInstance& instance, bool explore_include) {
  instance.validate();
  if (!instance.items.empty() && instance.capacity > 0) {
    std::int64_t min_weight = instance.items.front().weight;
    for (const auto& item : instance.items) {
      min_weight = std::min(min_weight, item.weight);
    }
    const auto depth = static_cast<std::uint64_t>((instance.capacity + min_weight - 1) / min_weight);
    const auto bound = static_cast<std::uint64_t>(instance.items.size()) * depth;
    if (bound > max_exhaustive_branches) {
      throw SearchBudgetExceeded("exhaustive search bound " + std::to_string(bound) + " exceeds " +
                                 std::to_string(max_exhaustive_branches));
    }
  }
  return ExhaustiveSearch(instance.items, explore_include).run(instance.capacity);
}

std::function<KnapsackSolution(KnapsackInstance)> greedy_solver(GreedyOptions options) {
  return [options](KnapsackInstance instance) { return greedy(std::move(instance), options); };
}

std::function<KnapsackSolution(KnapsackInstance)> exhaustive_solver(bool explore_include) {
  return [explore_include](KnapsackInstance instance) { return exhaustive(instance, explore_include); };
}

} // namespace

void KnapsackInstance::validate() const {
  if (capacity < 0) {
    throw std::invalid_argument("knapsack capacity must be non-negative");
  }
  std::set<std::string> names;
  for (const auto& item : items) {
    if (item.weight < 1) {
      throw std::invalid_argument("knapsack item '" + item.name + "' has weight < 1");
    }
    if (item.value < 1) {
      throw std::invalid_argument("knapsack item '" + item.name + "' has value < 1");
    }
    if (!names.insert(item.name).second) {
      throw std::invalid_argument("duplicate knapsack item name '" + item.name + "'");
    }
  }
}

KnapsackSolution knapsack_greedy(KnapsackInstance instance) { return greedy(std::move(instance), {}); }

KnapsackSolution knapsack_exhaustive(const KnapsackInstance& instance) { return exhaustive(instance, true); }

std::int64_t dp_reference(const KnapsackInstance& instance) {
  instance.validate();
  if (instance.capacity > max_dp_capacity) {
    throw std::invalid_argument("dp_reference: capacity exceeds table budget");
  }
  std::vector<std::int64_t> best(static_cast<std::size_t>(instance.capacity) + 1, 0);
  for (std::int64_t c = 1; c <= instance.capacity; ++c) {
    auto& cell = best[static_cast<std::size_t>(c)];
    for (const auto& item : instance.items) {
      if (item.weight <= c) {
        cell = std::max(cell, item.value + best[static_cast<std::size_t>(c - item.weight)]);
      }
    }
  }
  return best.back();
}

bool optimality_relation(const KnapsackSolution& exhaustive_solution, const KnapsackSolution& greedy_solution) {
  return exhaustive_solution.cum_value >= greedy_solution.cum_value;
}

bool approximation_relation(const KnapsackSolution& exhaustive_solution,
                            const KnapsackSolution& greedy_solution) {
  return optimality_relation(exhaustive_solution, greedy_solution) &&
         2 * greedy_solution.cum_value >= exhaustive_solution.cum_value;
}

bool is_feasible(const KnapsackInstance& instance, const KnapsackSolution& solution) {
  if (solution.cum_weight > instance.capacity) {
    return false;
  }
  std::map<std::string, const KnapsackItem*> by_name;
  for (const auto& item : instance.items) {
    by_name.emplace(item.name, &item);
  }
  std::int64_t value = 0;
  std::int64_t weight = 0;
  for (const auto& name : solution.packed) {
    const auto it = by_name.find(name);
    if (it == by_name.end()) {
      return false;
    }
    value += it->second->value;
    weight += it->second->weight;
  }
  return value == solution.cum_value && weight == solution.cum_weight;
}

KnapsackSolvers reference_knapsack_solvers() { return {greedy_solver({}), exhaustive_solver(true)}; }

const std::vector<MutantSpec>& knapsack_mutants() {
  static const std::vector<MutantSpec> catalog{
      {"greedy-sort-ascending", "greedy visits items by ascending density", false},
      {"exhaustive-skip-include", "exhaustive search never takes the include branch", false},
      {"greedy-capacity-off-by-one", "greedy admits cum_weight + weight <= capacity + 1", false},
  };
  return catalog;
}

KnapsackSolvers inject_knapsack_mutant(std::string_view name) {
  KnapsackSolvers solvers = reference_knapsack_solvers();
  if (name == "greedy-sort-ascending") {
    solvers.greedy = greedy_solver({DensityOrder::ascending, 0});
  } else if (name == "exhaustive-skip-include") {
    solvers.exhaustive = exhaustive_solver(false);
  } else if (name == "greedy-capacity-off-by-one") {
    solvers.greedy = greedy_solver({DensityOrder::descending, 1});
  } else {
    throw ConfigurationError("unknown knapsack mutant: " + std::string(name));
  }
  return solvers;
}

ProgramPair<KnapsackInstance, KnapsackSolution> greedy_exhaustive_pair(const KnapsackSolvers& solvers) {
  return {solvers.greedy, solvers.exhaustive,
          {Granularity::algorithm_replaced, ApplicationMode::added_alongside, Automation::manual, true, false}};
}

IntramorphicRelation<KnapsackSolution> optimality_check() {
  return {[](const KnapsackSolution& greedy_solution, const KnapsackSolution& exhaustive_solution) {
            return optimality_relation(exhaustive_solution, greedy_solution);
          },
          std::nullopt};
}

IntramorphicRelation<KnapsackSolution> approximation_check() {
  return {[](const KnapsackSolution& greedy_solution, const KnapsackSolution& exhaustive_solution) {
            return approximation_relation(exhaustive_solution, greedy_solution);
          },
          std::nullopt};
}

std::string render(const KnapsackInstance& instance) {
  std::ostringstream out;
  out << "capacity=" << instance.capacity << " items=[";
  for (std::size_t i = 0; i < instance.items.size(); ++i) {
    const auto& item = instance.items[i];
    out << (i ? ", " : "") << item.name << ":v" << item.value << "/w" << item.weight;
  }
  out << ']';
  return out.str();
}

std::string render(const KnapsackSolution& solution) {
  std::ostringstream out;
  out << "value=" << solution.cum_value << " weight=" << solution.cum_weight << " packed=[";
  for (std::size_t i = 0; i < solution.packed.size(); ++i) {
    out << (i ? ", " : "") << solution.packed[i];
  }
  out << ']';
  return out.str();
}

} // namespace intramorph
