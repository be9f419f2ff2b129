#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace stern3::cli {

// Exit codes: 0 success/pass, 1 verification failure, 2 usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace stern3::cli
