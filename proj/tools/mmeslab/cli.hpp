#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace mmeslab::cli {

// Runs one subcommand. Exit codes: 0 success / verdict true, 1 verdict false
// or no perfect discrimination setting, 2 invalid input. `args` excludes the
// program name. Honors MMES_LAB_SEED when --seed is absent.
int dispatch(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace mmeslab::cli
