#pragma once

#include <iosfwd>

namespace opetope::io {

// Exit codes: 0 success, 1 validation failure (or a negative answer from
// iso), 2 usage, parse or file error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace opetope::io
