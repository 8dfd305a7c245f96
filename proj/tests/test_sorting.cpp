#include "intramorph/baselines.hpp"
#include "intramorph/sorting.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <set>

using namespace intramorph;

namespace {

using Ints = std::vector<int>;

// Straight transcription of the buggy Python bubble sort, with Python's
// tuple-assignment order: both right-hand values are read before either
// store happens.
Ints python_buggy_bubble(Ints arr, bool descending) {
  const std::size_t n = arr.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j + i + 1 < n; ++j) {
      const bool out_of_order = descending ? arr[j] < arr[j + 1] : arr[j] > arr[j + 1];
      if (out_of_order) {
        const int rhs0 = arr[j + 1];
        const int rhs1 = arr[i];
        arr[j] = rhs0;
        arr[j + 1] = rhs1;
      }
    }
  }
  return arr;
}

// Every array of length <= max_len over values lo..hi.
std::vector<Ints> all_arrays(std::size_t max_len, int lo, int hi) {
  std::vector<Ints> out{{}};
  std::vector<Ints> frontier{{}};
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::vector<Ints> next;
    for (const auto& prefix : frontier) {
      for (int v = lo; v <= hi; ++v) {
        auto a = prefix;
        a.push_back(v);
        next.push_back(a);
      }
    }
    out.insert(out.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  return out;
}

} // namespace

TEST(Sorting, CorrectSortsMatchStdSort) {
  for (const auto& arr : all_arrays(5, -1, 2)) {
    auto expected = arr;
    std::sort(expected.begin(), expected.end());
    ASSERT_EQ(bubble_sort(arr), expected);
    ASSERT_EQ(insertion_sort(arr), expected);
    ASSERT_EQ(merge_sort(arr), expected);
    ASSERT_EQ(bubble_sort_reverse(arr), Ints(expected.rbegin(), expected.rend()));
  }
}

TEST(Sorting, CopyingWrappersLeaveInputAlone) {
  const Ints arr{3, 1, 2};
  bubble_sort(arr);
  merge_sort(arr);
  EXPECT_EQ(arr, (Ints{3, 1, 2}));
}

TEST(Sorting, ReverseRelation) {
  EXPECT_TRUE(reverse_relation({1, 2, 3}, {3, 2, 1}));
  EXPECT_TRUE(reverse_relation({}, {}));
  EXPECT_TRUE(reverse_relation({1, 1, 2}, {2, 1, 1}));
  EXPECT_FALSE(reverse_relation({1, 2, 1}, {3, 2, 1}));
  EXPECT_FALSE(reverse_relation({1, 2}, {2, 1, 0}));
}

TEST(Sorting, IndexBugTraces) {
  const auto buggy = inject_sorting_mutant("swap-index-i");
  EXPECT_EQ(buggy.bubble_sort({3, 1, 2}), (Ints{1, 2, 1}));
  EXPECT_EQ(buggy.bubble_sort({3, 1}), (Ints{1, 3}));
  EXPECT_EQ(buggy.bubble_sort_reverse({3, 1, 2}), (Ints{3, 2, 1}));
}

TEST(Sorting, IndexBugMatchesPythonSemanticsExhaustively) {
  const auto buggy = inject_sorting_mutant("swap-index-i");
  const auto both = inject_sorting_mutant("comparison-flip-reverse");
  for (const auto& arr : all_arrays(5, 0, 3)) {
    ASSERT_EQ(buggy.bubble_sort(arr), python_buggy_bubble(arr, false));
    ASSERT_EQ(both.bubble_sort(arr), python_buggy_bubble(arr, false));
    ASSERT_EQ(both.bubble_sort_reverse(arr), python_buggy_bubble(arr, true));
  }
}

TEST(Sorting, DoublyBuggyPairOnCanonicalInput) {
  // With the bug in both functions, [3, 1, 2] yields [1, 2, 1] ascending and
  // [3, 2, 3] descending; the reversed pair still disagrees.
  const auto both = inject_sorting_mutant("comparison-flip-reverse");
  EXPECT_EQ(both.bubble_sort({3, 1, 2}), (Ints{1, 2, 1}));
  EXPECT_EQ(both.bubble_sort_reverse({3, 1, 2}), (Ints{3, 2, 3}));
  EXPECT_TRUE(evaluate_pair(reverse_sort_pair(both), reverse_sort_relation(), Ints{3, 1, 2}).violated());
}

TEST(Sorting, DoublyBuggyPairNeverProducesSwappedOutputs) {
  // No small input makes the ascending side print [3, 2, 3] or the
  // descending side print [1, 2, 1].
  const auto both = inject_sorting_mutant("comparison-flip-reverse");
  for (const auto& arr : all_arrays(5, 0, 4)) {
    ASSERT_NE(both.bubble_sort(arr), (Ints{3, 2, 3}));
    ASSERT_NE(both.bubble_sort_reverse(arr), (Ints{1, 2, 1}));
  }
}

TEST(Sorting, SmallestIndexBugTriggerHasThreeElements) {
  const auto buggy = inject_sorting_mutant("swap-index-i");
  const auto pair = reverse_sort_pair(buggy);
  std::size_t shortest = 99;
  for (const auto& arr : all_arrays(3, 0, 2)) {
    if (evaluate_pair(pair, reverse_sort_relation(), arr).violated()) {
      shortest = std::min(shortest, arr.size());
    }
  }
  EXPECT_EQ(shortest, 3u);
}

TEST(Sorting, EveryMutantBreaksTheReverseRelationSomewhere) {
  for (const auto& mutant : sorting_mutants()) {
    const auto pair = reverse_sort_pair(inject_sorting_mutant(mutant.name));
    bool violated = false;
    for (const auto& arr : all_arrays(4, 0, 3)) {
      violated |= evaluate_pair(pair, reverse_sort_relation(), arr).violated();
    }
    EXPECT_TRUE(violated) << mutant.name;
  }
}

TEST(Sorting, CatalogueAndUnknownNames) {
  std::set<std::string> names;
  for (const auto& m : sorting_mutants()) {
    names.insert(m.name);
    EXPECT_FALSE(m.blind_spot);
  }
  EXPECT_EQ(names, (std::set<std::string>{"swap-index-i", "comparison-flip-reverse", "sort-ascending-in-reverse"}));
  EXPECT_THROW(inject_sorting_mutant("nope"), ConfigurationError);
}

TEST(Sorting, PairDescriptor) {
  const auto d = reverse_sort_pair().descriptor;
  EXPECT_EQ(d.granularity, Granularity::operator_replaced);
  EXPECT_EQ(d.application_mode, ApplicationMode::added_alongside);
  EXPECT_TRUE(d.relation_complete);
  EXPECT_FALSE(d.false_alarm_possible);
}
