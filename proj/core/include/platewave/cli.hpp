#pragma once

#include <string>
#include <vector>

namespace pw {

/// Entry point of the command-line tool. Subcommands: simulate,
/// dispersion, converge, analytic-curve, compare-lamb. Returns 0 on
/// success, 1 on runtime failure, 2 on usage or config errors.
int run_cli(const std::vector<std::string>& args);

int run_cli(int argc, char** argv);

}  // namespace pw
