#pragma once

#include <iosfwd>

namespace corelat::cli {

// Exit codes: 0 success, 1 a verification failed, 2 usage error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace corelat::cli
