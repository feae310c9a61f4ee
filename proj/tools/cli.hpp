#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace strictrank::cli {

enum ExitCode : int { kOk = 0, kDomainError = 1, kUsageError = 2 };

/// Runs one command line. `args` excludes the program name. Reads matrices
/// from `in` when --input is "-".
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace strictrank::cli
