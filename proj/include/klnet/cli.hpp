#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace klnet {

// Runs the kl command line on the given arguments (without the program name),
// writing to the given streams. Returns the process exit code: 0 on
// success/Found, 1 on verification failure or not found, 2 on a proved
// impossibility, 64 on usage errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace klnet
