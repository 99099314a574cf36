#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace betadic::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 1;  // I/O or configuration error
inline constexpr int kExitMath = 2;    // mathematical precondition failed

// Runs the command line; reports go to `out` (or --out), diagnostics and
// progress to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace betadic::cli
