#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace z2norm::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitParse = 2;
inline constexpr int kExitVerify = 3;

/// Entry point behind the z2norm executable; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace z2norm::cli
