#pragma once

#include <iosfwd>

namespace econreg {

inline constexpr int kExitOk = 0;
inline constexpr int kExitAnalysisError = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitConsistencyFailure = 3;

/// Entry point of the `econreg` command line tool.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace econreg
