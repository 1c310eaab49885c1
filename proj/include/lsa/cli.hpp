#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lsa {

/// Runs one CLI invocation (args exclude the program name). Deterministic:
/// output is a pure function of the inputs. Exit codes: 0 success / property
/// true, 1 property false / non-isomorphic / unknown, 2 input error.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace lsa
