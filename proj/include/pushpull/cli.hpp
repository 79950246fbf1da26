#pragma once

namespace pushpull::cli {

/// Runs the command line; returns 0 on success, 1 when a verification
/// fails, 2 on usage errors.
int run(int argc, char** argv);

}  // namespace pushpull::cli
