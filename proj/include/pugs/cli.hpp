// cli.hpp - command-line front end.  Subcommands: bounds, findpugs (the
// default when the first argument is a flag), verify, render, chart.
// Returns the process exit code: 0 on success (for verify: perfect
// separation), 1 when verification finds errors, 2 on usage/input problems.
#pragma once

namespace pugs {

int run_cli(int argc, const char* const* argv);

}  // namespace pugs
