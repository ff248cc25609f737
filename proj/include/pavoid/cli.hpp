#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pavoid {

// Runs one CLI invocation (args exclude the program name). Pure: identical
// args produce byte-identical output. Exit codes: 0 success, 1 usage or
// domain/resource error (one-line message on err), 2 oracle/formula
// disagreement under `count --method both --strict`.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace pavoid
