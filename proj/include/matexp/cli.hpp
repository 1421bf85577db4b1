#pragma once

// Command dispatch for the matexp tool.
//
//   exp       --matrix SRC --t REAL [--closed-form] [--json] [--tol X]
//   fn        --which cos|sin|cosh|sinh|expi+|expi- --matrix SRC [--json] [--tol X]
//   solve     --matrix SRC --x0 LIST (--t REAL | --grid A:B:H) [--closed-form] [--json] [--tol X]
//   canonical --matrix SRC [--json] [--tol X]
//   verify    --matrix SRC --t REAL [--tol X] [--json]
//
// SRC is a path to a JSON document {"matrix", "x0", "t", "t_grid", "tol"} or
// an inline literal such as "3,2;-8,-5". Command-line values take precedence
// over document values.
//
// Exit codes: 0 success, 1 numerical failure or verify FAIL, 2 malformed
// input. Nothing is written to `out` when the exit code is 2.

#include <ostream>
#include <string>
#include <vector>

namespace matexp::cli {

/// `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Threshold on the closed-form vs series relative error used by `verify`.
inline constexpr double kVerifyThreshold = 1e-9;

}  // namespace matexp::cli
