#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qcl::cli {

// Exit codes: 0 success, 1 config error, 2 solver failure,
// 3 oracle-check failures.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

int run(int argc, char** argv);

}  // namespace qcl::cli
