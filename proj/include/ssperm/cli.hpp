#pragma once

// Command-line front end.  run_cli is the whole program behind a testable
// interface: args exclude argv[0]; results go to `out`, diagnostics to `err`.
// Exit codes: 0 success, 2 usage/parse error, 3 domain violation, 4 I/O error.

#include <iosfwd>
#include <string>
#include <vector>

namespace ssperm {

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ssperm
