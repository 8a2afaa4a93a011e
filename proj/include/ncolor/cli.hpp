// cli.hpp -- command-line front end

#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ncolor::cli {

/// Exit statuses.
enum Status : int { kOk = 0, kDomainError = 1, kVerificationFailed = 2 };

/// Runs one invocation. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace ncolor::cli
