#pragma once

#include <iosfwd>

namespace plqo::cli {

/// Exit codes: 0 valid / satisfiable / true, 1 invalid / unsatisfiable /
/// false, 2 usage, parse or input errors, 3 budget or unsupported fragment.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace plqo::cli
