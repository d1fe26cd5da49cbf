#pragma once

namespace rla {

// Runs the command line tool; returns the process exit code
// (0 ok, 1 invariant failure, 2 usage error, 3 size budget exceeded).
int run_cli(int argc, char** argv);

}  // namespace rla
