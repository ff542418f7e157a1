#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace relcomm {

// Exit codes: 0 ok, 1 mismatch or failed audit, 2 bad input, 3 cap exceeded.
int run_cli(std::vector<std::string> const& args, std::ostream& out, std::ostream& err);

}  // namespace relcomm
