#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace swinv::cli {

enum ExitCode : int {
  ok = 0,
  internal_error = 1,
  domain_error = 2,
  parse_error = 3,
};

// Runs one command line (arguments without the program name) and writes the
// report to `out`, diagnostics to `err`. Output depends only on the
// arguments and the referenced files.
int run(const std::vector<std::string> &args, std::ostream &out,
        std::ostream &err);

} // namespace swinv::cli
