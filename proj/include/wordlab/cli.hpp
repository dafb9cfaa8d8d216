#pragma once

namespace wordlab {

// Exit codes: 0 success, 1 domain/usage error, 2 bound-violation or
// failed self-check.
int run_cli(int argc, char** argv);

}  // namespace wordlab
