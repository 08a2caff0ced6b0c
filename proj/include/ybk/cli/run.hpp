#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ybk::cli {

/// Exit codes: 0 success, 1 a mathematical check came out false, 2 usage or format error.
enum ExitCode : int { kOk = 0, kCheckFailed = 1, kUsage = 2 };

/// args[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// `reproduce <target>` body; targets: table1, torus, virtual, z3, borromean, all.
int reproduce(const std::string& target, int from, int to, bool json, unsigned threads, std::ostream& out,
              std::ostream& err);

}  // namespace ybk::cli
