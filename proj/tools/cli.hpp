#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace vital::cli {

inline constexpr int kOk = 0;
inline constexpr int kUsageError = 2;
inline constexpr int kInputError = 3;
inline constexpr int kComputeError = 4;

/// Runs one command. `args` excludes the program name. Results go to the
/// files named by --output, or to `out` when the output is "-".
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace vital::cli
