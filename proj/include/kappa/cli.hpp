#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace kappa::cli {

/// Exit codes: 0 success, 1 a verification check failed, 2 usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kappa::cli
