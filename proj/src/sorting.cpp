#include "intramorph/sorting.hpp"

#include "intramorph/budget.hpp"

#include <algorithm>
#include <string>

namespace intramorph {

namespace {

enum class Order { ascending, descending };
enum class SwapFault { none, index_i };

// Textbook bubble sort. With SwapFault::index_i the second half of
// the swap reads arr[i] instead of arr[j]. Both right-hand values are read
// before either store, as in a Python tuple assignment.
void bubble(std::span<int> arr, Order order, SwapFault fault) {
  const std::size_t length = arr.size();
  for (std::size_t i = 0; i < length; ++i) {
    for (std::size_t j = 0; j + 1 < length - i; ++j) {
      budget_tick();
      const bool out_of_order = order == Order::ascending ? arr[j] > arr[j + 1] : arr[j] < arr[j + 1];
      if (out_of_order) {
        const int first = arr[j + 1];
        const int second = fault == SwapFault::index_i ? arr[i] : arr[j];
        arr[j] = first;
        arr[j + 1] = second;
      }
    }
  }
}

void merge_sort_range(std::span<int> arr, std::vector<int>& scratch) {
  if (arr.size() < 2) {
    return;
  }
  const std::size_t mid = arr.size() / 2;
  merge_sort_range(arr.first(mid), scratch);
  merge_sort_range(arr.subspan(mid), scratch);
  scratch.clear();
  std::size_t left = 0;
  std::size_t right = mid;
  while (left < mid && right < arr.size()) {
    budget_tick();
    // <= keeps the merge stable.
    if (arr[left] <= arr[right]) {
      scratch.push_back(arr[left++]);
    } else {
      scratch.push_back(arr[right++]);
    }
  }
  scratch.insert(scratch.end(), arr.begin() + static_cast<std::ptrdiff_t>(left),
                 arr.begin() + static_cast<std::ptrdiff_t>(mid));
  scratch.insert(scratch.end(), arr.begin() + static_cast<std::ptrdiff_t>(right), arr.end());
  std::copy(scratch.begin(), scratch.end(), arr.begin());
}

SortFn copying(void (*in_place)(std::span<int>)) {
  return [in_place](std::vector<int> arr) {
    in_place(arr);
    return arr;
  };
}

SortFn copying_bubble(Order order, SwapFault fault) {
  return [order, fault](std::vector<int> arr) {
    bubble(arr, order, fault);
    return arr;
  };
}

} // namespace

void bubble_sort_in_place(std::span<int> arr) { bubble(arr, Order::ascending, SwapFault::none); }

void bubble_sort_reverse_in_place(std::span<int> arr) { bubble(arr, Order::descending, SwapFault::none); }

void insertion_sort_in_place(std::span<int> arr) {
  for (std::size_t i = 1; i < arr.size(); ++i) {
    const int key = arr[i];
    std::size_t j = i;
    while (j > 0 && arr[j - 1] > key) {
      budget_tick();
      arr[j] = arr[j - 1];
      --j;
    }
    arr[j] = key;
  }
}

void merge_sort_in_place(std::span<int> arr) {
  std::vector<int> scratch;
  scratch.reserve(arr.size());
  merge_sort_range(arr, scratch);
}

std::vector<int> bubble_sort(std::vector<int> arr) {
  bubble_sort_in_place(arr);
  return arr;
}

std::vector<int> bubble_sort_reverse(std::vector<int> arr) {
  bubble_sort_reverse_in_place(arr);
  return arr;
}

std::vector<int> insertion_sort(std::vector<int> arr) {
  insertion_sort_in_place(arr);
  return arr;
}

std::vector<int> merge_sort(std::vector<int> arr) {
  merge_sort_in_place(arr);
  return arr;
}

bool reverse_relation(const std::vector<int>& ascending, const std::vector<int>& descending) {
  return ascending.size() == descending.size() &&
         std::equal(ascending.rbegin(), ascending.rend(), descending.begin());
}

SortSuite reference_sort_suite() {
  return {copying(&bubble_sort_in_place), copying(&bubble_sort_reverse_in_place)};
}

const std::vector<MutantSpec>& sorting_mutants() {
  static const std::vector<MutantSpec> catalog{
      {"swap-index-i", "bubble_sort swaps with arr[i] instead of arr[j]", false},
      {"comparison-flip-reverse",
       "bubble_sort and bubble_sort_reverse both carry the swap-index bug (reverse differs only in the comparison)",
       false},
      {"sort-ascending-in-reverse", "bubble_sort_reverse keeps the ascending comparison", false},
  };
  return catalog;
}

SortSuite inject_sorting_mutant(std::string_view name) {
  SortSuite suite = reference_sort_suite();
  if (name == "swap-index-i") {
    suite.bubble_sort = copying_bubble(Order::ascending, SwapFault::index_i);
  } else if (name == "comparison-flip-reverse") {
    suite.bubble_sort = copying_bubble(Order::ascending, SwapFault::index_i);
    suite.bubble_sort_reverse = copying_bubble(Order::descending, SwapFault::index_i);
  } else if (name == "sort-ascending-in-reverse") {
    suite.bubble_sort_reverse = copying_bubble(Order::ascending, SwapFault::none);
  } else {
    throw ConfigurationError("unknown sorting mutant: " + std::string(name));
  }
  return suite;
}

ProgramPair<std::vector<int>, std::vector<int>> reverse_sort_pair(const SortSuite& suite) {
  return {suite.bubble_sort, suite.bubble_sort_reverse,
          {Granularity::operator_replaced, ApplicationMode::added_alongside, Automation::manual, true, false}};
}

IntramorphicRelation<std::vector<int>> reverse_sort_relation() {
  return {&reverse_relation, std::nullopt};
}

} // namespace intramorph
