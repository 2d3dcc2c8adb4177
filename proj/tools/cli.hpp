#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gehm::cli {

/// Runs the gehm command line on `args` (program name excluded). Returns the
/// exit status: 0 success, 1 check failure, 2 usage or input error, 3 guard
/// exceeded.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace gehm::cli
