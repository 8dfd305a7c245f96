#pragma once

#include "intramorph/core.hpp"

#include <functional>
#include <span>
#include <string_view>
#include <vector>

namespace intramorph {

/// Copying sort: the argument is the sort's private copy.
using SortFn = std::function<std::vector<int>(std::vector<int>)>;

// In-place forms.
void bubble_sort_in_place(std::span<int> arr);
void bubble_sort_reverse_in_place(std::span<int> arr);
void insertion_sort_in_place(std::span<int> arr);
void merge_sort_in_place(std::span<int> arr);

// Copying wrappers; oracle code only ever uses these.
std::vector<int> bubble_sort(std::vector<int> arr);
std::vector<int> bubble_sort_reverse(std::vector<int> arr);
std::vector<int> insertion_sort(std::vector<int> arr);
std::vector<int> merge_sort(std::vector<int> arr);

/// True iff reversing `ascending` yields `descending`.
bool reverse_relation(const std::vector<int>& ascending, const std::vector<int>& descending);

/// The two sorts the reverse-sort pair is built from.
struct SortSuite {
  SortFn bubble_sort;
  SortFn bubble_sort_reverse;
};

SortSuite reference_sort_suite();

/// Catalogue: swap-index-i, comparison-flip-reverse, sort-ascending-in-reverse.
const std::vector<MutantSpec>& sorting_mutants();

/// Reference suite with the named fault injected. Throws ConfigurationError
/// for unknown names.
SortSuite inject_sorting_mutant(std::string_view name);

/// bubble_sort -> bubble_sort_reverse, related by reverse_relation.
ProgramPair<std::vector<int>, std::vector<int>> reverse_sort_pair(const SortSuite& suite = reference_sort_suite());
IntramorphicRelation<std::vector<int>> reverse_sort_relation();

} // namespace intramorph
