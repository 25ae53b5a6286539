// commands.hpp: xyness command-line front-end
//
// Exit codes:
//   0  success
//   1  usage error (unknown flag, missing argument)
//   2  validation or config error
//   3  numerical failure (pairing, degeneracy, conditioning)
//   4  I/O error
//   5  oracle-check deviation above threshold

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace xyness::cli {

enum ExitCode : int {
    kOk = 0,
    kUsage = 1,
    kValidation = 2,
    kNumerical = 3,
    kIo = 4,
    kOracleMismatch = 5,
};

// args excludes the program name. stdout gets progress only, stderr diagnostics.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Worker count: flag (> 0) wins over MAX_WORKERS, which wins over `fallback`.
int resolve_workers(int flag, int fallback);

} // namespace xyness::cli
