#pragma once

#include <ostream>

namespace cqg::cli {

// Exit codes: 0 all checks pass, 1 a check failed, 2 usage or file error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cqg::cli
