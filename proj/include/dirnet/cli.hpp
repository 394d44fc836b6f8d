#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace dirnet {

// Exit codes: 0 ok, 1 internal error, 2 parse error, 3 precondition failure, 4 resource limit.
// `args` excludes the program name. Errors are written to `err` as JSON.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dirnet
