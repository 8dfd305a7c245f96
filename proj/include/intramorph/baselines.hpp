#pragma once

// Black-box comparison oracles for the sorting case study: a hand-written
// unit test, differential testing across implementations, and a metamorphic
// element-removal relation. All of them report RelationOutcome so they run
// in the same harness as intramorphic relations.

#include "intramorph/core.hpp"
#include "intramorph/sorting.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace intramorph {

/// `expected` must be the sorted permutation of `input`.
struct UnitCase {
  std::vector<int> input;
  std::vector<int> expected;
  friend bool operator==(const UnitCase&, const UnitCase&) = default;
};

/// The fixed cases the unit campaign cycles through; [3, 1, 2] comes first.
const std::vector<UnitCase>& default_unit_cases();

/// original output: sort(input); variant output: expected.
RelationOutcome<std::vector<int>> unit_oracle(const SortFn& sort, const UnitCase& unit_case);

/// Holds iff every algorithm agrees with the first. The variant output is
/// the first disagreeing result, or the last one when all agree. Throws
/// ConfigurationError for an empty list.
RelationOutcome<std::vector<int>> differential_oracle(std::span<const SortFn> algorithms,
                                                      const std::vector<int>& arr);

/// Sorts arr into o1, picks e = o1[pick_index], deletes the first
/// occurrence of e from a copy of arr and from o1, and compares sort(reduced
/// arr) with the reduced o1. original output: reduced o1 (the expectation);
/// variant output: sort(reduced arr). Throws std::invalid_argument for an
/// empty arr; a pick outside o1 is an ExecutionError.
RelationOutcome<std::vector<int>> metamorphic_removal_oracle(const SortFn& sort, const std::vector<int>& arr,
                                                             std::size_t pick_index);

} // namespace intramorph
