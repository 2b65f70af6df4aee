#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qlink::cli {

enum ExitCode : int { ok = 0, usage = 1, check_failed = 2, internal = 3 };

// `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qlink::cli
