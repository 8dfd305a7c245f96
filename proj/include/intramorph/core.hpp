#pragma once

// Program pairs, intramorphic relations and their evaluation.
//
// A ProgramPair holds an original program P and a variant P' in which one
// component has been replaced. An IntramorphicRelation states what must hold
// between P(I) and P'(I). evaluate_pair runs both sides on independent copies
// of the input and reports Holds, Violated, or ExecutionError.

#include "intramorph/budget.hpp"

#include <algorithm>
#include <concepts>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>
#include <vector>

namespace intramorph {

/// Unknown campaign or mutant, invalid repetition count, malformed config.
class ConfigurationError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

struct Provenance {
  std::uint64_t seed = 0;
  std::uint64_t iteration = 0;
  friend bool operator==(const Provenance&, const Provenance&) = default;
};

template <class T>
struct InputCase {
  T payload;
  Provenance provenance;
};

enum class Granularity { operator_replaced, function_added, parameter_added, algorithm_replaced };
enum class ApplicationMode { added_alongside, in_place_modified };
enum class Automation { manual, mechanical };

constexpr std::string_view to_string(Granularity g) {
  switch (g) {
  case Granularity::operator_replaced: return "operator";
  case Granularity::function_added: return "function-added";
  case Granularity::parameter_added: return "parameter-added";
  case Granularity::algorithm_replaced: return "algorithm-replaced";
  }
  return "?";
}

constexpr std::string_view to_string(ApplicationMode m) {
  return m == ApplicationMode::added_alongside ? "added-alongside" : "in-place-modified";
}

constexpr std::string_view to_string(Automation a) {
  return a == Automation::manual ? "manual" : "mechanical";
}

/// How P' was derived from P.
struct TransformationDescriptor {
  Granularity granularity = Granularity::function_added;
  ApplicationMode application_mode = ApplicationMode::added_alongside;
  Automation automation = Automation::manual;
  bool relation_complete = true;
  bool false_alarm_possible = false;
  friend bool operator==(const TransformationDescriptor&, const TransformationDescriptor&) = default;
};

/// Both programs take their input by value, so neither can touch the
/// caller's copy or the other side's copy.
template <class In, class Out>
struct ProgramPair {
  std::function<Out(In)> original;
  std::function<Out(In)> variant;
  TransformationDescriptor descriptor;
};

/// Median-of-k aggregation for relations over stochastic programs.
struct StatisticalConfig {
  unsigned repetitions = 5;
};

inline void validate_repetitions(unsigned k) {
  if (k == 0 || k % 2 == 0) {
    throw ConfigurationError("repetitions must be a positive odd integer, got " + std::to_string(k));
  }
}

template <class Out>
struct IntramorphicRelation {
  std::function<bool(const Out&, const Out&)> check;
  std::optional<StatisticalConfig> statistics;
};

enum class Status { holds, violated, execution_error };

constexpr std::string_view to_string(Status s) {
  switch (s) {
  case Status::holds: return "Holds";
  case Status::violated: return "Violated";
  case Status::execution_error: return "ExecutionError";
  }
  return "?";
}

template <class Out>
struct RelationOutcome {
  Status status = Status::holds;
  std::optional<Out> original_output;
  std::optional<Out> variant_output;
  std::string detail;

  static RelationOutcome checked(bool ok, Out original, Out variant, std::string detail = {}) {
    return {ok ? Status::holds : Status::violated, std::move(original), std::move(variant),
            std::move(detail)};
  }

  static RelationOutcome error(std::string detail, std::optional<Out> original = std::nullopt,
                               std::optional<Out> variant = std::nullopt) {
    return {Status::execution_error, std::move(original), std::move(variant), std::move(detail)};
  }

  bool holds() const noexcept { return status == Status::holds; }
  bool violated() const noexcept { return status == Status::violated; }
  bool errored() const noexcept { return status == Status::execution_error; }
};

namespace detail {

inline std::string describe_current_exception() {
  try {
    throw;
  } catch (const BudgetExceeded& e) {
    return std::string("budget: ") + e.what();
  } catch (const std::exception& e) {
    return e.what();
  } catch (...) {
    return "non-standard exception";
  }
}

template <class In, class Out>
std::optional<Out> run_side(const std::function<Out(In)>& program, const In& input,
                            ExecutionLimits limits, std::string& error) {
  try {
    BudgetScope scope(limits);
    return program(input);
  } catch (...) {
    error = describe_current_exception();
    return std::nullopt;
  }
}

template <class Out>
RelationOutcome<Out> apply_check(const IntramorphicRelation<Out>& rel, Out original, Out variant) {
  bool ok = false;
  try {
    ok = rel.check(original, variant);
  } catch (...) {
    return RelationOutcome<Out>::error("relation check raised: " + describe_current_exception(),
                                       std::move(original), std::move(variant));
  }
  return RelationOutcome<Out>::checked(ok, std::move(original), std::move(variant));
}

template <class In, class Out>
RelationOutcome<Out> evaluate_once(const ProgramPair<In, Out>& pair, const IntramorphicRelation<Out>& rel,
                                   const In& input, ExecutionLimits limits) {
  std::string error;
  auto original = run_side(pair.original, input, limits, error);
  if (!original) {
    return RelationOutcome<Out>::error("original: " + error);
  }
  auto variant = run_side(pair.variant, input, limits, error);
  if (!variant) {
    return RelationOutcome<Out>::error("variant: " + error, std::move(original));
  }
  return apply_check(rel, std::move(*original), std::move(*variant));
}

} // namespace detail

/// Inputs of stochastic programs embed their random source; derive_trial
/// (found by ADL) yields the input for an independent repetition.
template <class In>
concept TrialDerivable = requires(const In& in, std::uint64_t trial) {
  { derive_trial(in, trial) } -> std::same_as<In>;
};

/// Median of an odd-sized sample.
inline double median(std::vector<double> values) {
  if (values.empty() || values.size() % 2 == 0) {
    throw std::invalid_argument("median: sample size must be odd");
  }
  const auto mid = values.begin() + static_cast<std::ptrdiff_t>(values.size() / 2);
  std::nth_element(values.begin(), mid, values.end());
  return *mid;
}

/// Runs each side k times (trial 0 on the input as given, trial t on
/// derive_trial(input, t)), takes the median of each side and applies the
/// relation to the two medians. With k == 1 this is a plain evaluation.
template <TrialDerivable In, std::floating_point Out>
RelationOutcome<Out> statistical_evaluate(const ProgramPair<In, Out>& pair,
                                          const IntramorphicRelation<Out>& rel, const In& input,
                                          unsigned k, ExecutionLimits limits = {}) {
  validate_repetitions(k);
  if (k == 1) {
    return detail::evaluate_once(pair, rel, input, limits);
  }
  std::vector<double> originals;
  std::vector<double> variants;
  originals.reserve(k);
  variants.reserve(k);
  std::string error;
  for (unsigned trial = 0; trial < k; ++trial) {
    const In trial_input = trial == 0 ? input : derive_trial(input, trial);
    auto original = detail::run_side(pair.original, trial_input, limits, error);
    if (!original) {
      return RelationOutcome<Out>::error("original (trial " + std::to_string(trial) + "): " + error);
    }
    auto variant = detail::run_side(pair.variant, trial_input, limits, error);
    if (!variant) {
      return RelationOutcome<Out>::error("variant (trial " + std::to_string(trial) + "): " + error);
    }
    originals.push_back(static_cast<double>(*original));
    variants.push_back(static_cast<double>(*variant));
  }
  return detail::apply_check(rel, static_cast<Out>(median(std::move(originals))),
                             static_cast<Out>(median(std::move(variants))));
}

/// Evaluates P and P' on `input` and checks the relation between their
/// outputs. Relations with a statistical config are evaluated as
/// median-of-k. Crashes and budget overruns become ExecutionError.
template <class In, class Out>
RelationOutcome<Out> evaluate_pair(const ProgramPair<In, Out>& pair, const IntramorphicRelation<Out>& rel,
                                   const In& input, ExecutionLimits limits = {}) {
  if (rel.statistics) {
    if constexpr (TrialDerivable<In> && std::floating_point<Out>) {
      return statistical_evaluate(pair, rel, input, rel.statistics->repetitions, limits);
    } else {
      throw ConfigurationError("statistical relation requires a trial-derivable input and scalar output");
    }
  }
  return detail::evaluate_once(pair, rel, input, limits);
}

template <class In, class Out>
RelationOutcome<Out> evaluate_pair(const ProgramPair<In, Out>& pair, const IntramorphicRelation<Out>& rel,
                                   const InputCase<In>& input, ExecutionLimits limits = {}) {
  return evaluate_pair(pair, rel, input.payload, limits);
}

/// A named, injectable seeded fault.
struct MutantSpec {
  std::string name;
  std::string description;
  /// The owning relation is known not to detect this mutant.
  bool blind_spot = false;
};

/// P(I) == P'(I), for semantics-preserving replacements. Floating-point
/// outputs must go through a tolerance-aware relation instead.
template <class Out>
IntramorphicRelation<Out> equivalence_relation() {
  static_assert(!std::is_floating_point_v<Out>, "compare floating-point outputs through a relation predicate");
  return {[](const Out& original, const Out& variant) { return original == variant; }, std::nullopt};
}

} // namespace intramorph
