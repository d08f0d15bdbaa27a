#pragma once

#include <iosfwd>
#include <string_view>
#include <vector>

namespace thermores {

/// Exit codes: 0 success / verdict true, 1 verdict false, 2 input error,
/// 3 reproduction mismatch.
enum ExitCode : int {
  kExitOk = 0,
  kExitFalse = 1,
  kExitInput = 2,
  kExitMismatch = 3,
};

/// Entry point of the `thermores` tool; callable from tests.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Comma-separated alpha list: decimals, "p/q" and "inf".
/// Throws Error(ParseError).
std::vector<double> parse_alpha_grid(std::string_view text);

/// THERMO_ALPHA_GRID if set, else the default grid.
std::vector<double> configured_alpha_grid();

}  // namespace thermores
