#pragma once

#include <iosfwd>

namespace circlespace {

// Exit codes: 0 all checks pass, 1 a check failed, 2 the command line or an
// input could not be parsed. Errors go to err as one JSON object.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace circlespace
