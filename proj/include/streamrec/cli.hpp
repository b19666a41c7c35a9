#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace streamrec {

inline constexpr int kExitAccept = 0;
inline constexpr int kExitReject = 1;
inline constexpr int kExitUsage = 2;

/// Entry point of the `streamrec` tool. `args` excludes the program name.
/// Returns 0 on accept (or success), 1 on reject, 2 on usage or validation
/// errors.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace streamrec
