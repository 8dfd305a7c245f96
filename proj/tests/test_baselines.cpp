#include "intramorph/baselines.hpp"
#include "intramorph/sorting.hpp"

#include <gtest/gtest.h>

using namespace intramorph;

namespace {
using Ints = std::vector<int>;
const SortFn buggy = inject_sorting_mutant("swap-index-i").bubble_sort;
} // namespace

TEST(Baselines, UnitCasesStartWithCanonicalCase) {
  const auto& cases = default_unit_cases();
  ASSERT_FALSE(cases.empty());
  EXPECT_EQ(cases.front().input, (Ints{3, 1, 2}));
  EXPECT_EQ(cases.front().expected, (Ints{1, 2, 3}));
  for (const auto& c : cases) {
    auto sorted = c.input;
    std::sort(sorted.begin(), sorted.end());
    EXPECT_EQ(sorted, c.expected);
  }
}

TEST(Baselines, UnitOracleReportsActualOutput) {
  const auto out = unit_oracle(buggy, default_unit_cases().front());
  EXPECT_TRUE(out.violated());
  EXPECT_EQ(*out.original_output, (Ints{1, 2, 1}));
  EXPECT_EQ(*out.variant_output, (Ints{1, 2, 3}));
  EXPECT_TRUE(unit_oracle(bubble_sort, default_unit_cases().front()).holds());
}

TEST(Baselines, DifferentialOracle) {
  const std::vector<SortFn> correct{bubble_sort, merge_sort, insertion_sort};
  EXPECT_TRUE(differential_oracle(correct, {3, 1, 2}).holds());
  const std::vector<SortFn> mixed{buggy, merge_sort, insertion_sort};
  const auto out = differential_oracle(mixed, {3, 1, 2});
  EXPECT_TRUE(out.violated());
  EXPECT_EQ(*out.original_output, (Ints{1, 2, 1}));
  EXPECT_EQ(*out.variant_output, (Ints{1, 2, 3}));
  EXPECT_THROW(differential_oracle({}, {1}), ConfigurationError);
}

TEST(Baselines, MetamorphicRemovalOnCanonicalExample) {
  // Removing 2 from [3, 1, 2]: the buggy sort gives [1, 3] but the reduced
  // expectation is [1, 1].
  const auto out = metamorphic_removal_oracle(buggy, {3, 1, 2}, 1);
  EXPECT_TRUE(out.violated());
  EXPECT_EQ(*out.original_output, (Ints{1, 1}));
  EXPECT_EQ(*out.variant_output, (Ints{1, 3}));
}

TEST(Baselines, MetamorphicRemovalHoldsForCorrectSort) {
  for (std::size_t pick = 0; pick < 4; ++pick) {
    EXPECT_TRUE(metamorphic_removal_oracle(bubble_sort, {4, 4, 0, 7}, pick).holds());
  }
}

TEST(Baselines, MetamorphicRemovalPreconditions) {
  EXPECT_THROW(metamorphic_removal_oracle(bubble_sort, {}, 0), std::invalid_argument);
  EXPECT_TRUE(metamorphic_removal_oracle(bubble_sort, {1, 2}, 5).errored());
}
