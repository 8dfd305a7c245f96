#pragma once

#include <chrono>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace intramorph {

/// Raised by budget_tick() once the active execution deadline has passed.
class BudgetExceeded : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct ExecutionLimits {
  std::chrono::milliseconds timeout{5000};
};

namespace detail {
struct BudgetState {
  bool active = false;
  std::chrono::steady_clock::time_point deadline{};
  std::uint32_t ticks = 0;
};
extern thread_local BudgetState budget_state;
[[noreturn]] void budget_expired();
} // namespace detail

/// Installs a deadline for the current thread. Scopes nest; the previous
/// deadline is restored on exit.
class BudgetScope {
public:
  explicit BudgetScope(ExecutionLimits limits);
  ~BudgetScope();
  BudgetScope(const BudgetScope&) = delete;
  BudgetScope& operator=(const BudgetScope&) = delete;

private:
  detail::BudgetState saved_;
};

/// Cooperative cancellation point for long-running loops. The clock is
/// consulted every 4096 ticks.
inline void budget_tick() {
  auto& state = detail::budget_state;
  if (!state.active || (++state.ticks & 0xfffu) != 0) {
    return;
  }
  if (std::chrono::steady_clock::now() > state.deadline) {
    detail::budget_expired();
  }
}

} // namespace intramorph
