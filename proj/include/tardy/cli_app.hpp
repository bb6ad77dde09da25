#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tardy {

// Runs the command-line front end on an argument list (without the
// program name). Exit codes: 0 success, 1 selftest failure,
// 2 usage/parse error, 3 solver precondition violation,
// 4 solver disagreement in bench mode.
int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tardy
