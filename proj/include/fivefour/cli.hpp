#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fivefour::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitData = 1;
inline constexpr int kExitConfig = 2;

// Runs one command line. Results go to `out` unless --out names a directory;
// warnings go to `err` prefixed with "WARN:".
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fivefour::cli
