#pragma once

#include <istream>
#include <ostream>
#include <string>
#include <vector>

namespace nca::cli {

enum ExitStatus : int {
  kSuccess = 0,
  kDataError = 1,
  kUsageError = 2,
};

/// Runs one `nca` invocation. args[0] is the program name. Data goes to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err);

}  // namespace nca::cli
