#pragma once

#include <ostream>

namespace conncert {

/// Entry point behind the `conncert` binary. Returns 0 on success, 1 when a
/// verification campaign finds a counterexample, 2 on bad flags or input.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace conncert
