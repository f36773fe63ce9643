#pragma once

#include <iosfwd>

namespace carmichael::cli {

// Exit codes: 0 success, 1 domain error (a JSON error object is written to
// out), 2 usage error (message and accepted flags on err).
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace carmichael::cli
