#pragma once

#include <iosfwd>

namespace orbitkit {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitVerification = 2;

// Entry point of the `orbitkit` command line tool; results go to `out` unless
// --output names a file, diagnostics to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace orbitkit
