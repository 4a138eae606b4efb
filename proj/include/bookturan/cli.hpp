#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bookturan {

// Command-line front end. `args` excludes the program name. Returns the
// process exit status: 0 on success, 1 when a verify run does not reproduce
// its statement (or is cut off), 2 on usage errors and malformed input.
int run_cli(const std::vector<std::string>& args, std::istream& in,
            std::ostream& out, std::ostream& err);

}  // namespace bookturan
