#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace coherent::cli {

enum ExitCode : int { kOk = 0, kValidation = 1, kInvariant = 2, kVerifyFailed = 3 };

// args excludes the program name.  Color is used only when `color` is set
// (main decides from the terminal and NO_COLOR).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, bool color = false);

}  // namespace coherent::cli
