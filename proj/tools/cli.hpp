#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hml::cli {

/// Exit codes: 0 success or true, 1 false or distinguished, 2 usage or input error.
inline constexpr int kTrue = 0;
inline constexpr int kFalse = 1;
inline constexpr int kUsage = 2;

/// Runs one command. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hml::cli
