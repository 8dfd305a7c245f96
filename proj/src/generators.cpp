#include "intramorph/generators.hpp"

#include "intramorph/core.hpp"

namespace intramorph {

namespace {

void require(bool ok, const char* message) {
  if (!ok) {
    throw ConfigurationError(message);
  }
}

Expr random_subtree(SeededSource& src, const TreeConfig& cfg, unsigned remaining_depth) {
  // Two in three nodes above the depth limit are operations.
  if (remaining_depth > 0 && src.uniform_below(3) != 0) {
    const char op = src.coin() ? '*' : '+';
    Expr left = random_subtree(src, cfg, remaining_depth - 1);
    Expr right = random_subtree(src, cfg, remaining_depth - 1);
    return make_operation(op, std::move(left), std::move(right));
  }
  if (src.coin()) {
    return make_variable(cfg.variable_names[src.uniform_below(cfg.variable_names.size())]);
  }
  return make_constant(static_cast<std::uint64_t>(src.uniform_int(cfg.constants.lo, cfg.constants.hi)));
}

// A, B, ..., Z, AA, AB, ...
std::string item_name(std::size_t index) {
  std::string name;
  ++index;
  while (index > 0) {
    --index;
    name.insert(name.begin(), static_cast<char>('A' + index % 26));
    index /= 26;
  }
  return name;
}

} // namespace

void GeneratorConfig::validate() const {
  require(!array.values.empty(), "array value range is empty");
  require(!tree.constants.empty(), "tree constant range is empty");
  require(tree.constants.lo >= 0, "tree constants must be non-negative");
  require(!tree.variable_names.empty(), "tree needs at least one variable name");
  require(!knapsack.values.empty() && knapsack.values.lo >= 1, "knapsack values must be a non-empty range >= 1");
  require(!knapsack.weights.empty() && knapsack.weights.lo >= 1, "knapsack weights must be a non-empty range >= 1");
  require(!knapsack.capacity.empty() && knapsack.capacity.lo >= 0, "knapsack capacity range is invalid");
  montecarlo.validate();
}

std::vector<int> random_array(SeededSource& src, const GeneratorConfig& cfg) {
  const auto length = src.uniform_below(cfg.array.max_length + 1);
  std::vector<int> arr;
  arr.reserve(length);
  for (std::uint64_t i = 0; i < length; ++i) {
    arr.push_back(static_cast<int>(src.uniform_int(cfg.array.values.lo, cfg.array.values.hi)));
  }
  return arr;
}

Expr random_tree(SeededSource& src, const GeneratorConfig& cfg) {
  return random_subtree(src, cfg.tree, cfg.tree.max_depth);
}

KnapsackInstance random_knapsack_instance(SeededSource& src, const GeneratorConfig& cfg) {
  const auto& k = cfg.knapsack;
  KnapsackInstance instance;
  const auto count = src.uniform_below(k.max_items + 1);
  for (std::uint64_t i = 0; i < count; ++i) {
    const auto value = src.uniform_int(k.values.lo, k.values.hi);
    const auto weight = src.uniform_int(k.weights.lo, k.weights.hi);
    instance.items.push_back({item_name(i), value, weight});
  }
  instance.capacity = src.uniform_int(k.capacity.lo, k.capacity.hi);
  return instance;
}

ConvergenceInput random_convergence_input(SeededSource& src, const GeneratorConfig& cfg) {
  ConvergenceInput input{cfg.montecarlo.n_small, cfg.montecarlo.n_large, 0, 0};
  input.seed_small = src.next_u64();
  input.seed_large = src.next_u64();
  return input;
}

std::vector<std::vector<int>> shrink(const std::vector<int>& arr) {
  std::vector<std::vector<int>> candidates;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    auto smaller = arr;
    smaller.erase(smaller.begin() + static_cast<std::ptrdiff_t>(i));
    candidates.push_back(std::move(smaller));
  }
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const int e = arr[i];
    if (e == 0) {
      continue;
    }
    // Toward zero: 0, e/2, e -/+ 1, without repeats.
    std::vector<int> replacements{0};
    if (e / 2 != 0) {
      replacements.push_back(e / 2);
    }
    const int step = e > 0 ? e - 1 : e + 1;
    if (step != 0 && step != e / 2) {
      replacements.push_back(step);
    }
    for (const int r : replacements) {
      auto simpler = arr;
      simpler[i] = r;
      candidates.push_back(std::move(simpler));
    }
  }
  return candidates;
}

std::vector<Expr> shrink(const Expr& tree) {
  const auto* operation = std::get_if<Operation>(&tree.node);
  if (operation == nullptr) {
    return {};
  }
  std::vector<Expr> candidates{*operation->left, *operation->right};
  for (auto& left : shrink(*operation->left)) {
    candidates.push_back(make_operation(operation->op, std::move(left), *operation->right));
  }
  for (auto& right : shrink(*operation->right)) {
    candidates.push_back(make_operation(operation->op, *operation->left, std::move(right)));
  }
  return candidates;
}

std::vector<KnapsackInstance> shrink(const KnapsackInstance& instance) {
  std::vector<KnapsackInstance> candidates;
  for (std::size_t i = 0; i < instance.items.size(); ++i) {
    auto smaller = instance;
    smaller.items.erase(smaller.items.begin() + static_cast<std::ptrdiff_t>(i));
    candidates.push_back(std::move(smaller));
  }
  // Capacity shrinks stay >= 1.
  if (instance.capacity > 1) {
    const std::int64_t half = instance.capacity / 2;
    auto halved = instance;
    halved.capacity = half;
    candidates.push_back(std::move(halved));
    if (instance.capacity - 1 != half) {
      auto decremented = instance;
      decremented.capacity = instance.capacity - 1;
      candidates.push_back(std::move(decremented));
    }
  }
  return candidates;
}

} // namespace intramorph
