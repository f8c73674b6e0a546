#pragma once

#include <ostream>

namespace qmap::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDisagreement = 1;
inline constexpr int kExitUsage = 2;

/// Entry point of the `qmap` tool, usable in-process. argv[0] is the program name.
int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

}  // namespace qmap::cli
