#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dacol::cli {

inline constexpr int kOk = 0;
inline constexpr int kCheckFailed = 1;
inline constexpr int kUsage = 2;

// Runs one command line (without the program name). Graph input is read
// from the FILE argument, or from `in` when it is absent or "-".
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace dacol::cli
