#include "intramorph/baselines.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace intramorph {

namespace {

template <class F>
RelationOutcome<std::vector<int>> guarded(F&& body) {
  try {
    return body();
  } catch (const std::exception& e) {
    return RelationOutcome<std::vector<int>>::error(e.what());
  }
}

void remove_first(std::vector<int>& values, int e) {
  const auto it = std::find(values.begin(), values.end(), e);
  if (it != values.end()) {
    values.erase(it);
  }
}

} // namespace

const std::vector<UnitCase>& default_unit_cases() {
  static const std::vector<UnitCase> cases{
      {{3, 1, 2}, {1, 2, 3}},
      {{}, {}},
      {{5, 5, 1}, {1, 5, 5}},
      {{1, 2, 3}, {1, 2, 3}},
      {{9, 0, 4, 4, 7}, {0, 4, 4, 7, 9}},
  };
  return cases;
}

RelationOutcome<std::vector<int>> unit_oracle(const SortFn& sort, const UnitCase& unit_case) {
  return guarded([&] {
    auto actual = sort(unit_case.input);
    const bool ok = actual == unit_case.expected;
    return RelationOutcome<std::vector<int>>::checked(ok, std::move(actual), unit_case.expected);
  });
}

RelationOutcome<std::vector<int>> differential_oracle(std::span<const SortFn> algorithms,
                                                      const std::vector<int>& arr) {
  if (algorithms.empty()) {
    throw ConfigurationError("differential oracle needs at least one algorithm");
  }
  return guarded([&] {
    std::vector<std::vector<int>> sorted_arrays;
    sorted_arrays.reserve(algorithms.size());
    for (const auto& algorithm : algorithms) {
      sorted_arrays.push_back(algorithm(arr));
    }
    const auto mismatch = std::find_if(sorted_arrays.begin() + 1, sorted_arrays.end(),
                                       [&](const auto& sorted) { return sorted != sorted_arrays.front(); });
    const bool all_same = mismatch == sorted_arrays.end();
    auto other = all_same ? sorted_arrays.back() : *mismatch;
    std::string detail;
    if (!all_same) {
      detail = "algorithm " + std::to_string(mismatch - sorted_arrays.begin()) + " disagrees with algorithm 0";
    }
    return RelationOutcome<std::vector<int>>::checked(all_same, sorted_arrays.front(), std::move(other),
                                                      std::move(detail));
  });
}

RelationOutcome<std::vector<int>> metamorphic_removal_oracle(const SortFn& sort, const std::vector<int>& arr,
                                                             std::size_t pick_index) {
  if (arr.empty()) {
    throw std::invalid_argument("metamorphic removal oracle needs a non-empty array");
  }
  return guarded([&]() -> RelationOutcome<std::vector<int>> {
    auto sorted_arr = sort(arr);
    if (pick_index >= sorted_arr.size()) {
      return RelationOutcome<std::vector<int>>::error("pick index outside the sorted output");
    }
    const int random_elem = sorted_arr[pick_index];
    auto smaller = arr;
    remove_first(smaller, random_elem);
    auto sorted_smaller_arr = sort(std::move(smaller));
    remove_first(sorted_arr, random_elem);
    const bool ok = sorted_arr == sorted_smaller_arr;
    return RelationOutcome<std::vector<int>>::checked(ok, std::move(sorted_arr), std::move(sorted_smaller_arr),
                                                      "removed " + std::to_string(random_elem));
  });
}

} // namespace intramorph
