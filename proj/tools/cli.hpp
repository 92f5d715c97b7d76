#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ezl::cli {

enum ExitCode : int {
  kOk = 0,
  kCheckFailed = 1,
  kDomain = 2,
  kPrecision = 3,
  kUsage = 64,
};

/// Runs one command line (argv[0] is the program name).
int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err);
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ezl::cli
