#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pspread::cli {

// Command-line driver. args excludes the program name.
// Exit codes: 0 success, 1 validation failure, 2 usage error.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace pspread::cli
