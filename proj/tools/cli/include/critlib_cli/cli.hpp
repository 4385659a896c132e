#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace critlib::cli {

// Exit codes: 0 success, 1 domain error or failed verification, 2 usage or unreadable input.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace critlib::cli
