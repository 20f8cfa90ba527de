#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace symramsey::cli {

/// Runs `symramsey <args...>`. Exit codes: 0 verified success, 1 negative
/// mathematical outcome, 2 usage, validation or I/O failure. Reports go to
/// `out` (or --output), diagnostics to `err`.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace symramsey::cli
