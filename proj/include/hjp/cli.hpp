#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hjp::cli {

// Runs one subcommand. Exit codes: 0 success, 1 check/run failure,
// 2 usage or domain error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hjp::cli
