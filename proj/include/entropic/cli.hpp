#pragma once

namespace entropic {

/// Parses and executes one command-line invocation. Returns the process exit
/// code: 0 = ran and every checked expectation holds, 1 = ran but a
/// should-hold check failed, 2 = usage or numeric error.
int run_cli(int argc, const char* const* argv);

}  // namespace entropic
