#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mpa::cli {

/// Exit codes: 0 success, 1 a verification reported failure, 2 usage or input error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mpa::cli
