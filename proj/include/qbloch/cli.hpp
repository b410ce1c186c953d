#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qbloch {

// Command-line front end. `args` excludes the program name.
// Exit codes: 0 success / valid verdict, 1 invalid verdict or failed
// selftest, 2 usage or I/O error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qbloch
