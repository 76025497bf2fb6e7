#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bfmle::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitDomain = 3;

// Runs one invocation. `args` excludes the program name. Results go to
// `out`; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bfmle::cli
