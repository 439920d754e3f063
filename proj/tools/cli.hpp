#pragma once

#include <iosfwd>

namespace twosided::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitCapExceeded = 3;

/// Entry point behind the `twosided` executable. "-" as a file name means stdin.
int cli_main(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace twosided::cli
