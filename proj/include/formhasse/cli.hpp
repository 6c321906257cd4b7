#pragma once

// The formhasse command line. Exit codes: 0 success / equivalent / all
// checks pass, 1 inequivalent or a failed check, 2 usage error, 3 no witness
// found within the bound.

#include <iosfwd>
#include <string>
#include <vector>

namespace formhasse::cli {

inline constexpr int kOk = 0;
inline constexpr int kNegative = 1;
inline constexpr int kUsage = 2;
inline constexpr int kNotFound = 3;

/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace formhasse::cli
