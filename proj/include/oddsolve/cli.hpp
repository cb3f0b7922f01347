#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace oddsolve::cli {

/// Runs one command (args exclude the program name). Exit codes: 0 success
/// or feasible, 2 infeasible or undefined, 1 error.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace oddsolve::cli
