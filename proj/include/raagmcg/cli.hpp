#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace raagmcg::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomainError = 1;
inline constexpr int kExitUsage = 2;

/// Runs the command line `args` (without the program name). Results go to
/// `out`; a domain error is written to `out` as {"error":..,"message":..}.
/// Usage errors go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace raagmcg::cli
