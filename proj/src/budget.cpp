#include "intramorph/budget.hpp"

#include <algorithm>

namespace intramorph {

namespace detail {
thread_local BudgetState budget_state;

void budget_expired() {
  throw BudgetExceeded("execution budget exceeded");
}
} // namespace detail

BudgetScope::BudgetScope(ExecutionLimits limits) : saved_(detail::budget_state) {
  auto& state = detail::budget_state;
  const auto deadline = std::chrono::steady_clock::now() + limits.timeout;
  // An inner scope never extends an enclosing deadline.
  state.deadline = saved_.active ? std::min(deadline, saved_.deadline) : deadline;
  state.active = true;
  state.ticks = 0;
}

BudgetScope::~BudgetScope() {
  detail::budget_state = saved_;
}

} // namespace intramorph
