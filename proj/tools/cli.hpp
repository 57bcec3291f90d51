#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rcb::cli {

// Runs one toolkit command (args exclude the program name).  The structured
// report goes to `out`, a one-line summary to `err`.  Returns the process
// exit status: 0 pass, 1 fail, 2 input error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rcb::cli
