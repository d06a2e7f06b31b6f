#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace krv::cli {

inline constexpr const char* kSchema = "krverify-report/1";

enum ExitCode : int { kPass = 0, kFail = 1, kUsage = 2 };

/// Entry point shared by the executable and the tests. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace krv::cli
