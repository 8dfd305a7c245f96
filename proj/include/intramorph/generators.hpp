#pragma once

// Seeded input generation and shrinking for each case study's input domain.

#include "intramorph/ast.hpp"
#include "intramorph/knapsack.hpp"
#include "intramorph/montecarlo.hpp"
#include "intramorph/source.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace intramorph {

struct IntRange {
  std::int64_t lo = 0;
  std::int64_t hi = 0;
  bool empty() const noexcept { return lo > hi; }
};

struct ArrayConfig {
  std::size_t max_length = 8;
  IntRange values{0, 9};
};

struct TreeConfig {
  unsigned max_depth = 4;
  std::vector<std::string> variable_names{"a", "b", "c"};
  IntRange constants{0, 9};
};

struct KnapsackConfig {
  std::size_t max_items = 6;
  IntRange values{1, 20};
  IntRange weights{1, 10};
  IntRange capacity{1, 50};
};

struct GeneratorConfig {
  ArrayConfig array;
  TreeConfig tree;
  KnapsackConfig knapsack;
  /// Sample counts and k for the Monte Carlo convergence inputs.
  SampleBudgetPair montecarlo;

  /// Throws ConfigurationError on empty ranges, weights below 1, negative
  /// constants or an empty variable set.
  void validate() const;
};

/// Length uniform in [0, max_length], elements uniform in the value range.
std::vector<int> random_array(SeededSource& src, const GeneratorConfig& cfg = {});

/// Depth <= max_depth; operators drawn from {+, *}, leaves are variables or
/// constants with equal probability.
Expr random_tree(SeededSource& src, const GeneratorConfig& cfg = {});

/// 0..max_items items named A, B, C, ...
KnapsackInstance random_knapsack_instance(SeededSource& src, const GeneratorConfig& cfg = {});

/// Configured sample counts with two fresh estimator seeds.
ConvergenceInput random_convergence_input(SeededSource& src, const GeneratorConfig& cfg = {});

// Shrink candidates, simplest first. Every candidate is strictly smaller
// under the domain's measure:
//   array:    (length, sum of |element|)
//   tree:     node count
//   knapsack: (item count, capacity)
std::vector<std::vector<int>> shrink(const std::vector<int>& arr);
std::vector<Expr> shrink(const Expr& tree);
std::vector<KnapsackInstance> shrink(const KnapsackInstance& instance);

} // namespace intramorph
