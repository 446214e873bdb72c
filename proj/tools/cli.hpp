#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "qcollatz/dynamics.hpp"

namespace qcollatz::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

/// "T", "Tq", "shift", or "A=<expr>,B=<expr>". Throws std::invalid_argument
/// for unknown names and even parameters.
MapSpec parse_map(const std::string& text);

/// Runs one command line (without the program name). Data goes to `out`,
/// diagnostics to `err`; the return value is the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qcollatz::cli
