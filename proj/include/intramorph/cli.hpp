#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace intramorph {

/// Exit codes of `run`: 0 no violation, 1 violation found, 2 usage or
/// configuration error. `matrix` exits 0 when every cell has its expected
/// classification and 1 otherwise.
inline constexpr int exit_ok = 0;
inline constexpr int exit_violation = 1;
inline constexpr int exit_usage = 2;

/// `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace intramorph
