#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace reduxwords::cli {

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCounterexample = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitNotCertified = 3;

/// Entry point behind the `reduxwords` binary. args excludes argv[0].
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace reduxwords::cli
