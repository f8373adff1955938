#pragma once

// Command-line front end. run_cli is the whole program minus process plumbing.

#include <iosfwd>
#include <string>
#include <vector>

namespace schubres::cli {

enum ExitCode : int {
  kOk = 0,
  kVerifyFailed = 1,
  kUsage = 2,
  kInternal = 3,
};

// args excludes the program name. Errors go to err as one line: "error code=<code> message=<text>".
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace schubres::cli
